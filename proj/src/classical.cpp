#include "polynum/classical.hpp"

#include <mutex>
#include <set>
#include <stdexcept>

#include "polynum/config.hpp"
#include "polynum/series.hpp"

namespace polynum {

namespace {

// Memoized lower-triangular recurrence table. The factor applied to the
// "same k" predecessor distinguishes the two Stirling kinds:
//   first kind (unsigned): weight(n, k) = n - 1
//   second kind:           weight(n, k) = k
class Triangle {
 public:
  using Weight = long (*)(int n, int k);

  explicit Triangle(Weight weight) : weight_(weight) {}

  Integer at(int n, int k) {
    if (n < 0) {
      throw std::invalid_argument("triangle index n must be >= 0, got " +
                                  std::to_string(n));
    }
    if (k < 0 || k > n) return Integer(0);
    require_within_cap(n, "memoized number triangle");
    std::lock_guard<std::mutex> lock(mu_);
    grow(n);
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
  }

 private:
  void grow(int n) {
    if (rows_.empty()) {
      rows_.push_back({Integer(1)});
    }
    for (int m = static_cast<int>(rows_.size()); m <= n; ++m) {
      std::vector<Integer> row(static_cast<size_t>(m) + 1);
      const auto& prev = rows_[static_cast<size_t>(m - 1)];
      row[0] = Integer(0);
      for (int j = 1; j <= m; ++j) {
        Integer val = prev[static_cast<size_t>(j - 1)];
        if (j < m) val += Integer(weight_(m, j)) * prev[static_cast<size_t>(j)];
        row[static_cast<size_t>(j)] = std::move(val);
      }
      rows_.push_back(std::move(row));
    }
  }

  Weight weight_;
  std::mutex mu_;
  std::vector<std::vector<Integer>> rows_;
};

Triangle& stirling1_triangle() {
  static Triangle tri(+[](int n, int) -> long { return n - 1; });
  return tri;
}

Triangle& stirling2_triangle() {
  static Triangle tri(+[](int, int k) -> long { return k; });
  return tri;
}

void require_distinct_points(int n_max, const std::vector<Rational>& points) {
  if (n_max < 0) {
    throw std::invalid_argument("n_max must be >= 0");
  }
  std::set<std::string> seen;
  for (const auto& p : points) seen.insert(p.str());
  if (static_cast<int>(seen.size()) < n_max + 1) {
    throw std::invalid_argument(
        "certifying degree-" + std::to_string(n_max) +
        " identities needs at least " + std::to_string(n_max + 1) +
        " distinct sample points, got " + std::to_string(seen.size()));
  }
}

std::string point_label(int n, const Rational& x) {
  return "n=" + std::to_string(n) + " x=" + x.str();
}

}  // namespace

Integer stirling1_unsigned(int n, int k) { return stirling1_triangle().at(n, k); }

Integer stirling1_signed(int n, int k) {
  Integer u = stirling1_unsigned(n, k);
  return ((n - k) % 2 != 0) ? -u : u;
}

Integer stirling2(int n, int k) { return stirling2_triangle().at(n, k); }

Integer lah(int n, int k) {
  if (n < 0 || k < 0) {
    throw std::invalid_argument("lah requires n, k >= 0");
  }
  if (n == 0 && k == 0) return Integer(1);
  if (n == 0 || k == 0 || k > n) return Integer(0);
  return binomial(n - 1, k - 1) * div_exact(factorial(n), factorial(k));
}

Rational bernoulli_order(int n, int r) {
  if (n < 0) {
    throw std::invalid_argument("bernoulli_order requires n >= 0");
  }
  TruncatedSeries gf = bernoulli_gf_series(r, n);
  return gf[n] * Rational(factorial(n));
}

std::vector<Rational> bernoulli_order_row(int r, int max_n) {
  if (max_n < 0) {
    throw std::invalid_argument("bernoulli_order_row requires max_n >= 0");
  }
  TruncatedSeries gf = bernoulli_gf_series(r, max_n);
  std::vector<Rational> out(static_cast<size_t>(max_n) + 1);
  Rational fact(1);
  for (int n = 0; n <= max_n; ++n) {
    if (n > 0) fact *= Rational(n);
    out[static_cast<size_t>(n)] = gf[n] * fact;
  }
  return out;
}

Rational falling_factorial(const Rational& x, int n) {
  if (n < 0) {
    throw std::invalid_argument("falling_factorial requires n >= 0");
  }
  Rational out(1);
  for (int i = 0; i < n; ++i) out *= x - Rational(i);
  return out;
}

Rational rising_factorial(const Rational& x, int n) {
  if (n < 0) {
    throw std::invalid_argument("rising_factorial requires n >= 0");
  }
  Rational out(1);
  for (int i = 0; i < n; ++i) out *= x + Rational(i);
  return out;
}

IdentityReport check_lah_connection(int n_max,
                                    const std::vector<Rational>& points) {
  require_distinct_points(n_max, points);
  IdentityReport rep;
  rep.identity = "eq1";
  rep.parameters = "n_max=" + std::to_string(n_max);
  rep.note =
      "rising factorial in the falling-factorial basis via Lah numbers, and "
      "the signed inverse; certified by evaluation at n_max+1 distinct points";
  for (int n = 0; n <= n_max; ++n) {
    for (const auto& x : points) {
      Rational rhs(0);
      for (int k = 0; k <= n; ++k) {
        rhs += Rational(lah(n, k)) * falling_factorial(x, k);
      }
      rep.cases.push_back(
          make_case(point_label(n, x), rising_factorial(x, n), rhs));
      Rational inv_rhs(0);
      for (int k = 0; k <= n; ++k) {
        Rational term = Rational(lah(n, k)) * rising_factorial(x, k);
        if ((n - k) % 2 != 0) term = -term;
        inv_rhs += term;
      }
      rep.cases.push_back(make_case("inverse " + point_label(n, x),
                                    falling_factorial(x, n), inv_rhs));
    }
  }
  return rep;
}

IdentityReport check_stirling1_connection(int n_max,
                                          const std::vector<Rational>& points) {
  require_distinct_points(n_max, points);
  IdentityReport rep;
  rep.identity = "eq4";
  rep.parameters = "n_max=" + std::to_string(n_max);
  rep.note =
      "falling factorial in the monomial basis via signed Stirling numbers of "
      "the first kind; certified by evaluation";
  for (int n = 0; n <= n_max; ++n) {
    for (const auto& x : points) {
      Rational rhs(0);
      for (int k = 0; k <= n; ++k) {
        rhs += Rational(stirling1_signed(n, k)) * x.pow(k);
      }
      rep.cases.push_back(
          make_case(point_label(n, x), falling_factorial(x, n), rhs));
    }
  }
  return rep;
}

IdentityReport check_stirling2_connection(int n_max,
                                          const std::vector<Rational>& points) {
  require_distinct_points(n_max, points);
  IdentityReport rep;
  rep.identity = "eq5";
  rep.parameters = "n_max=" + std::to_string(n_max);
  rep.note =
      "monomial in the falling-factorial basis via Stirling numbers of the "
      "second kind; certified by evaluation";
  for (int n = 0; n <= n_max; ++n) {
    for (const auto& x : points) {
      Rational rhs(0);
      for (int k = 0; k <= n; ++k) {
        rhs += Rational(stirling2(n, k)) * falling_factorial(x, k);
      }
      rep.cases.push_back(make_case(point_label(n, x), x.pow(n), rhs));
    }
  }
  return rep;
}

IdentityReport check_connection_identities(int n_max,
                                           const std::vector<Rational>& points) {
  IdentityReport rep;
  rep.identity = "connection";
  rep.parameters = "n_max=" + std::to_string(n_max);
  rep.note =
      "factorial-basis connection identities (Lah with inverse, Stirling "
      "first and second kind), each certified by point evaluation";
  for (const IdentityReport& part :
       {check_lah_connection(n_max, points),
        check_stirling1_connection(n_max, points),
        check_stirling2_connection(n_max, points)}) {
    for (const auto& c : part.cases) {
      IdentityCase tagged = c;
      tagged.label = part.identity + " " + tagged.label;
      rep.cases.push_back(std::move(tagged));
    }
  }
  return rep;
}

}  // namespace polynum
