#include "polynum/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "polynum/config.hpp"

namespace polynum {

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) {
    throw std::invalid_argument("series order must be >= 0, got " +
                                std::to_string(order));
  }
  coeffs_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("series needs at least the t^0 coefficient");
  }
}

const Rational& TruncatedSeries::operator[](int m) const {
  if (m < 0 || m > order()) {
    throw std::out_of_range("coefficient of t^" + std::to_string(m) +
                            " is unknown at truncation order " +
                            std::to_string(order()));
  }
  return coeffs_[static_cast<size_t>(m)];
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

std::optional<int> TruncatedSeries::valuation() const {
  for (int m = 0; m <= order(); ++m) {
    if (!coeffs_[static_cast<size_t>(m)].is_zero()) return m;
  }
  return std::nullopt;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
  if (new_order < 0 || new_order > order()) {
    throw std::out_of_range("cannot truncate order-" + std::to_string(order()) +
                            " series to order " + std::to_string(new_order));
  }
  return TruncatedSeries(std::vector<Rational>(
      coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

std::string TruncatedSeries::str() const {
  std::string out;
  for (int m = 0; m <= order(); ++m) {
    if (m > 0) out += " + ";
    out += coeffs_[static_cast<size_t>(m)].str();
    if (m == 1) {
      out += "*t";
    } else if (m > 1) {
      out += "*t^" + std::to_string(m);
    }
  }
  return out;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  int n = std::min(a.order(), b.order());
  std::vector<Rational> c(static_cast<size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) c[static_cast<size_t>(m)] = a[m] + b[m];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  int n = std::min(a.order(), b.order());
  std::vector<Rational> c(static_cast<size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) c[static_cast<size_t>(m)] = a[m] - b[m];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries scale(const TruncatedSeries& a, const Rational& c) {
  std::vector<Rational> out(a.coeffs());
  for (Rational& x : out) x *= c;
  return TruncatedSeries(std::move(out));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  int n = std::min(a.order(), b.order());
  std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[j].is_zero()) continue;
      c[static_cast<size_t>(i + j)] += a[i] * b[j];
    }
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) {
  auto vb = b.valuation();
  if (!vb) {
    throw std::domain_error("series division by the all-zero series");
  }
  int v = *vb;
  auto va = a.valuation();
  if (va && *va < v) {
    throw std::domain_error(
        "division not representable as power series: divisor valuation " +
        std::to_string(v) + " exceeds dividend valuation " +
        std::to_string(*va));
  }
  int result_order = std::min(a.order(), b.order()) - v;
  if (result_order < 0) {
    throw std::invalid_argument(
        "series division: operand orders too small for a single quotient "
        "coefficient");
  }
  if (!va) {
    return TruncatedSeries(result_order);  // 0 / b = 0
  }
  // Factor t^v out of both operands; the shifted divisor is a unit.
  int n = result_order;
  std::vector<Rational> q(static_cast<size_t>(n) + 1);
  const Rational& lead = b[v];
  for (int m = 0; m <= n; ++m) {
    Rational acc = a[m + v];
    for (int j = 1; j <= m; ++j) {
      const Rational& bj = b[j + v];
      if (bj.is_zero()) continue;
      acc -= bj * q[static_cast<size_t>(m - j)];
    }
    q[static_cast<size_t>(m)] = acc / lead;
  }
  return TruncatedSeries(std::move(q));
}

TruncatedSeries compose(const TruncatedSeries& outer,
                        const TruncatedSeries& inner) {
  if (!inner[0].is_zero()) {
    throw std::invalid_argument(
        "series composition requires inner constant term 0, got " +
        inner[0].str());
  }
  int n = std::min(outer.order(), inner.order());
  // Horner over series. inner has valuation >= 1, so outer coefficients
  // beyond t^n cannot influence the first n+1 result coefficients.
  std::vector<Rational> acc(static_cast<size_t>(n) + 1, Rational(0));
  for (int m = n; m >= 0; --m) {
    // acc <- acc * inner + outer[m], truncated at n.
    std::vector<Rational> next(static_cast<size_t>(n) + 1, Rational(0));
    for (int i = 0; i <= n; ++i) {
      if (acc[static_cast<size_t>(i)].is_zero()) continue;
      for (int j = 1; i + j <= n; ++j) {  // inner[0] = 0
        if (inner[j].is_zero()) continue;
        next[static_cast<size_t>(i + j)] +=
            acc[static_cast<size_t>(i)] * inner[j];
      }
    }
    next[0] += outer[m];
    acc = std::move(next);
  }
  return TruncatedSeries(std::move(acc));
}

TruncatedSeries diff(const TruncatedSeries& a) {
  if (a.order() < 1) {
    throw std::invalid_argument(
        "cannot differentiate an order-0 truncation: the result's constant "
        "term is unknown");
  }
  std::vector<Rational> c(static_cast<size_t>(a.order()));
  for (int m = 1; m <= a.order(); ++m) {
    c[static_cast<size_t>(m - 1)] = Rational(m) * a[m];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries integrate(const TruncatedSeries& a) {
  std::vector<Rational> c(static_cast<size_t>(a.order()) + 2, Rational(0));
  for (int m = 0; m <= a.order(); ++m) {
    c[static_cast<size_t>(m + 1)] = a[m] / Rational(m + 1);
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries pow(const TruncatedSeries& a, int e) {
  if (e < 0) {
    throw std::invalid_argument("series pow requires e >= 0, got " +
                                std::to_string(e));
  }
  TruncatedSeries out = one_series(a.order());
  for (int i = 0; i < e; ++i) out = mul(out, a);
  return out;
}

bool coefficients_match(const TruncatedSeries& a, const TruncatedSeries& b) {
  int n = std::min(a.order(), b.order());
  for (int m = 0; m <= n; ++m) {
    if (a[m] != b[m]) return false;
  }
  return true;
}

TruncatedSeries geometric_series(int order) {
  require_within_cap(order, "geometric series");
  return TruncatedSeries(
      std::vector<Rational>(static_cast<size_t>(order) + 1, Rational(1)));
}

TruncatedSeries exp_series(int order) {
  require_within_cap(order, "exp series");
  std::vector<Rational> c(static_cast<size_t>(order) + 1);
  Rational inv_fact(1);
  c[0] = Rational(1);
  for (int m = 1; m <= order; ++m) {
    inv_fact /= Rational(m);
    c[static_cast<size_t>(m)] = inv_fact;
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries one_minus_exp_neg_series(int order) {
  require_within_cap(order, "1-e^{-t} series");
  // c_0 = 0, c_m = (-1)^{m+1}/m! for m >= 1.
  std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
  Rational term(1);
  for (int m = 1; m <= order; ++m) {
    term /= Rational(-m);
    c[static_cast<size_t>(m)] = -term;
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries log_one_plus_series(int order) {
  require_within_cap(order, "log(1+t) series");
  std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
  for (int m = 1; m <= order; ++m) {
    c[static_cast<size_t>(m)] = Rational((m % 2 == 0) ? -1 : 1, m);
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries neg_log_one_minus_series(int order) {
  require_within_cap(order, "-log(1-t) series");
  std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
  for (int m = 1; m <= order; ++m) {
    c[static_cast<size_t>(m)] = Rational(1, m);
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries monomial_series(int k, int order) {
  if (k < 0) {
    throw std::invalid_argument("monomial exponent must be >= 0, got " +
                                std::to_string(k));
  }
  require_within_cap(order, "monomial series");
  TruncatedSeries out(order);
  if (k <= order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
    c[static_cast<size_t>(k)] = Rational(1);
    return TruncatedSeries(std::move(c));
  }
  return out;  // t^k is 0 at every stored index
}

TruncatedSeries one_series(int order) { return monomial_series(0, order); }

TruncatedSeries one_minus_t_series(int order) {
  require_within_cap(order, "1-t series");
  std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
  c[0] = Rational(1);
  if (order >= 1) c[1] = Rational(-1);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries bernoulli_gf_series(int r, int order) {
  if (r < 1) {
    throw std::invalid_argument("bernoulli_gf_order_r requires r >= 1, got " +
                                std::to_string(r));
  }
  require_within_cap(order, "bernoulli generating function");
  // t/(e^t - 1): the denominator has valuation 1, so work one order higher.
  TruncatedSeries num = monomial_series(1, order + 1);
  TruncatedSeries den = sub(exp_series(order + 1), one_series(order + 1));
  TruncatedSeries base = div(num, den);  // order `order`
  return pow(base, r);
}

TruncatedSeries builtin_series(std::string_view name, int order,
                               std::optional<int> param) {
  if (name == "geometric") return geometric_series(order);
  if (name == "exp") return exp_series(order);
  if (name == "one_minus_exp_neg") return one_minus_exp_neg_series(order);
  if (name == "log_one_plus") return log_one_plus_series(order);
  if (name == "neg_log_one_minus") return neg_log_one_minus_series(order);
  if (name == "power") {
    if (!param) {
      throw std::invalid_argument("builtin \"power\" needs the exponent k");
    }
    return monomial_series(*param, order);
  }
  if (name == "bernoulli_gf_order_r") {
    if (!param) {
      throw std::invalid_argument(
          "builtin \"bernoulli_gf_order_r\" needs the order r");
    }
    return bernoulli_gf_series(*param, order);
  }
  throw std::invalid_argument("unknown builtin series \"" + std::string(name) +
                              "\"");
}

bool is_builtin_series_name(std::string_view name) {
  return name == "geometric" || name == "exp" || name == "one_minus_exp_neg" ||
         name == "log_one_plus" || name == "neg_log_one_minus" ||
         name == "power" || name == "bernoulli_gf_order_r";
}

}  // namespace polynum
