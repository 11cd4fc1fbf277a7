// Copyright 2026 The primefrac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <string>

#include "primefrac/analysis.hpp"
#include "primefrac/constants.hpp"

namespace primefrac {

namespace {

struct Panel {
  double a, fa, m, fm, b, fb, whole;
};

double simpson(double a, double fa, double fm, double b, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double refine(const std::function<double(double)>& f, const Panel& p, double tol, int depth) {
  const double lm = 0.5 * (p.a + p.m);
  const double rm = 0.5 * (p.m + p.b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(p.a, p.fa, flm, p.m, p.fm);
  const double right = simpson(p.m, p.fm, frm, p.b, p.fb);
  const double delta = left + right - p.whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return refine(f, {p.a, p.fa, lm, flm, p.m, p.fm, left}, tol / 2, depth - 1) +
         refine(f, {p.m, p.fm, rm, frm, p.b, p.fb, right}, tol / 2, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  return refine(f, {a, fa, m, fm, b, fb, simpson(a, fa, fm, b, fb)}, tol, 48);
}

double log_integral(double x) {
  if (x < 2) throw DomainError("log_integral: x must be at least 2");
  static const double li2 = std::stod(std::string(reference::kLi2));
  const double scale = std::max(1.0, x / std::log(x));
  return li2 + adaptive_simpson([](double u) { return 1.0 / std::log(u); }, 2.0, x, 1e-10 * scale);
}

double log_square_integral(double x) {
  if (x < 2) throw DomainError("log_square_integral: x must be at least 2");
  const double scale = std::max(1.0, x / (std::log(x) * std::log(x)));
  return adaptive_simpson(
      [](double u) {
        const double l = std::log(u);
        return 1.0 / (l * l);
      },
      2.0, x, 1e-10 * scale);
}

}  // namespace primefrac
