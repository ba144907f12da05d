#include "polynum/identities.hpp"

#include <stdexcept>

#include "polynum/classical.hpp"
#include "polynum/multi_numbers.hpp"
#include "polynum/series.hpp"

namespace polynum {

namespace {

Rational sign(long parity) { return (parity % 2 != 0) ? Rational(-1) : Rational(1); }

std::string rn_label(const char* head, int a, int b) {
  return std::string(head) + "=" + std::to_string(a) + " n=" + std::to_string(b);
}

}  // namespace

IdentityReport verify_lemma21(int r_max, int n_max) {
  if (r_max < 1 || n_max < r_max) {
    throw std::invalid_argument("verify_lemma21 requires 1 <= r_max <= n_max");
  }
  IdentityReport rep;
  rep.identity = "lemma2.1";
  rep.parameters =
      "r_max=" + std::to_string(r_max) + " n_max=" + std::to_string(n_max);
  rep.note =
      "all-ones multi-Stirling numbers against the unsigned first-kind "
      "Stirling triangle (chain dynamic program vs. recurrence table)";
  for (int r = 1; r <= r_max; ++r) {
    auto row = multi_stirling1_row(MultiIndex::ones(r), n_max);
    for (int n = r; n <= n_max; ++n) {
      rep.cases.push_back(make_case(rn_label("r", r, n),
                                    row[static_cast<size_t>(n)],
                                    Rational(stirling1_unsigned(n, r))));
    }
  }
  return rep;
}

IdentityReport verify_thm22(const MultiIndex& k, int n_max) {
  if (n_max < 0) {
    throw std::invalid_argument("verify_thm22 requires n_max >= 0");
  }
  int r = k.depth();
  IdentityReport rep;
  rep.identity = "thm2.2";
  rep.parameters = "index=" + k.str() + " max_n=" + std::to_string(n_max);
  rep.note =
      "multi-Bernoulli numbers: substitution pipeline vs. the closed double "
      "sum over higher-order Bernoulli, second-kind Stirling and "
      "multi-Stirling numbers";
  std::vector<Rational> pipeline = multi_bernoulli(k, n_max);
  std::vector<Rational> s1 = multi_stirling1_row(k, n_max + r);
  std::vector<Rational> b_ord = bernoulli_order_row(r, n_max);
  Rational r_fact(factorial(r));
  for (int n = 0; n <= n_max; ++n) {
    Rational rhs(0);
    for (int l = 0; l <= n; ++l) {
      for (int m = r; m <= l + r; ++m) {
        const Rational& s1m = s1[static_cast<size_t>(m)];
        if (s1m.is_zero()) continue;
        Rational term = Rational(binomial(n, l)) *
                        b_ord[static_cast<size_t>(n - l)] *
                        sign(n - r - m) * Rational(stirling2(l + r, m)) * s1m;
        term /= r_fact * Rational(binomial(l + r, r));
        rhs += term;
      }
    }
    rep.cases.push_back(make_case("n=" + std::to_string(n),
                                  pipeline[static_cast<size_t>(n)], rhs));
  }
  return rep;
}

IdentityReport verify_thm23(const MultiIndex& k_pos, int n_max) {
  if (!k_pos.is_standard() || k_pos.depth() < 2) {
    throw std::invalid_argument(
        "verify_thm23 needs (k_1,...,k_r) with every entry >= 1 and r >= 2");
  }
  int r = k_pos.depth();
  if (n_max < r) {
    throw std::invalid_argument("verify_thm23 requires n_max >= depth");
  }
  int k_last = k_pos.last();
  MultiIndex extended = k_pos.with_last(-k_last);

  // Left side twice, by independent routes; exact agreement is asserted.
  std::vector<Rational> via_pipeline = multi_lah_row(extended, n_max);
  std::vector<Rational> via_split = multi_lah_last_entry_split_row(k_pos, n_max);
  for (int n = 0; n <= n_max; ++n) {
    if (via_pipeline[static_cast<size_t>(n)] != via_split[static_cast<size_t>(n)]) {
      throw std::runtime_error(
          "multi-Lah route disagreement for index (" + extended.str() +
          ") at n=" + std::to_string(n) + ": pipeline " +
          via_pipeline[static_cast<size_t>(n)].str() + " vs split " +
          via_split[static_cast<size_t>(n)].str());
    }
  }

  // Shorter-index rows L^{(k_1,...,k_{r-2},k_{r-1}-j)}(m, r-1) for the sum.
  std::vector<std::vector<Rational>> shorter;
  for (int j = 0; j <= k_last; ++j) {
    MultiIndex prefix = k_pos.drop_last().with_last(k_pos.entry(r - 2) - j);
    shorter.push_back(multi_lah_row(prefix, n_max));
  }

  IdentityReport rep;
  rep.identity = "thm2.3";
  rep.parameters = "index=" + extended.str() + " max_n=" + std::to_string(n_max);
  rep.note =
      "negative-last-entry multi-Lah recurrence. Left side computed by two "
      "independent routes (extended-index pipeline and binomial last-entry "
      "split); their exact agreement is asserted, not reported. The "
      "comparison against the quadruple sum is recorded per case and left "
      "informational: this report is the arithmetic verdict on the stated "
      "recurrence.";
  Rational n_fact(1);
  std::vector<Rational> p_fact(static_cast<size_t>(n_max) + 1, Rational(1));
  for (int p = 1; p <= n_max; ++p) {
    p_fact[static_cast<size_t>(p)] = p_fact[static_cast<size_t>(p - 1)] * Rational(p);
  }
  for (int n = r; n <= n_max; ++n) {
    Rational rhs(0);
    for (int p = r; p <= n; ++p) {
      Rational inner(0);
      for (int l = 1; l <= p; ++l) {
        if (p - l < r - 1) continue;  // shorter-index value is 0 below valuation
        for (int mr = 1; mr <= l; ++mr) {  // S2(l, mr) = 0 past mr = l
          Integer s2 = stirling2(l, mr);
          if (s2.is_zero()) continue;
          Rational common = sign(mr + l) * Rational(factorial(mr)) *
                            Rational(binomial(p, l)) * Rational(s2);
          for (int j = 0; j <= k_last; ++j) {
            const Rational& lah_short =
                shorter[static_cast<size_t>(j)][static_cast<size_t>(p - l)];
            if (lah_short.is_zero()) continue;
            inner += common * Rational(pow(Integer(mr), k_last - j)) *
                     Rational(binomial(k_last, j)) * lah_short;
          }
        }
      }
      rhs += inner * p_fact[static_cast<size_t>(n)] / p_fact[static_cast<size_t>(p)];
    }
    rep.cases.push_back(make_case("n=" + std::to_string(n),
                                  via_pipeline[static_cast<size_t>(n)], rhs,
                                  /*hard=*/false));
  }
  (void)n_fact;
  return rep;
}

IdentityReport verify_thm24(const MultiIndex& k, int n_max) {
  if (n_max < 0) {
    throw std::invalid_argument("verify_thm24 requires n_max >= 0");
  }
  int r = k.depth();
  IdentityReport rep;
  rep.identity = "thm2.4";
  rep.parameters = "index=" + k.str() + " max_n=" + std::to_string(n_max);
  rep.note =
      "multi-Stirling numbers recovered from multi-Bernoulli numbers against "
      "the unsigned first-kind Stirling triangle";
  std::vector<Rational> s1 = multi_stirling1_row(k, n_max + r);
  std::vector<Rational> b = multi_bernoulli(k, n_max);
  Rational r_fact(factorial(r));
  for (int n = 0; n <= n_max; ++n) {
    Rational rhs(0);
    for (int m = 0; m <= n; ++m) {
      Integer s1u = stirling1_unsigned(n, m);
      if (s1u.is_zero()) continue;
      rhs += b[static_cast<size_t>(m)] * Rational(s1u);
    }
    rhs *= r_fact * Rational(binomial(n + r, n));
    rep.cases.push_back(make_case("n=" + std::to_string(n),
                                  s1[static_cast<size_t>(n + r)], rhs));
  }
  return rep;
}

IdentityReport verify_thm25(const MultiIndex& k, int n_max) {
  int r = k.depth();
  if (n_max < r) {
    throw std::invalid_argument("verify_thm25 requires n_max >= depth");
  }
  IdentityReport rep;
  rep.identity = "thm2.5";
  rep.parameters = "index=" + k.str() + " max_n=" + std::to_string(n_max);
  rep.note =
      "multi-Lah numbers from multi-Stirling numbers through the "
      "second-kind-Stirling double sum";
  std::vector<Rational> lah_row = multi_lah_row(k, n_max);
  std::vector<Rational> s1 = multi_stirling1_row(k, n_max);
  std::vector<Rational> fact(static_cast<size_t>(n_max) + 1, Rational(1));
  for (int i = 1; i <= n_max; ++i) {
    fact[static_cast<size_t>(i)] = fact[static_cast<size_t>(i - 1)] * Rational(i);
  }
  for (int n = r; n <= n_max; ++n) {
    Rational rhs(0);
    for (int l = r; l <= n; ++l) {
      Rational inner(0);
      for (int m = r; m <= l; ++m) {
        const Rational& s1m = s1[static_cast<size_t>(m)];
        if (s1m.is_zero()) continue;
        inner += s1m * sign(m - l) * Rational(stirling2(l, m));
      }
      rhs += inner * Rational(binomial(r + n - l - 1, n - l)) *
             fact[static_cast<size_t>(n)] / fact[static_cast<size_t>(l)];
    }
    rep.cases.push_back(make_case("n=" + std::to_string(n),
                                  lah_row[static_cast<size_t>(n)], rhs));
  }
  return rep;
}

IdentityReport verify_reductions(int r_max, int n_max) {
  if (r_max < 1 || n_max < r_max) {
    throw std::invalid_argument(
        "verify_reductions requires 1 <= r_max <= n_max");
  }
  IdentityReport rep;
  rep.identity = "reductions";
  rep.parameters =
      "r_max=" + std::to_string(r_max) + " n_max=" + std::to_string(n_max);
  rep.note =
      "all-ones reductions of the three families to their classical "
      "companions, plus the closed form of the all-ones multiple logarithm";
  for (int r = 1; r <= r_max; ++r) {
    MultiIndex ones = MultiIndex::ones(r);
    auto ms = multi_stirling1_row(ones, n_max);
    for (int n = r; n <= n_max; ++n) {
      rep.cases.push_back(make_case("multi-stirling " + rn_label("r", r, n),
                                    ms[static_cast<size_t>(n)],
                                    Rational(stirling1_unsigned(n, r))));
    }
    auto ml = multi_lah_row(ones, n_max);
    for (int n = r; n <= n_max; ++n) {
      rep.cases.push_back(make_case("multi-lah " + rn_label("r", r, n),
                                    ml[static_cast<size_t>(n)],
                                    Rational(lah(n, r))));
    }
    auto mb = multi_bernoulli(ones, n_max);
    auto b_ord = bernoulli_order_row(r, n_max);
    Rational inv_r_fact = Rational(Integer(1), factorial(r));
    for (int m = 0; m <= n_max; ++m) {
      Rational expected =
          inv_r_fact * sign(m) * b_ord[static_cast<size_t>(m)];
      rep.cases.push_back(make_case(
          "multi-bernoulli r=" + std::to_string(r) + " m=" + std::to_string(m),
          mb[static_cast<size_t>(m)], expected));
    }
    TruncatedSeries dp = li_series(ones, n_max);
    TruncatedSeries closed = li_all_ones_closed_form(r, n_max);
    for (int n = 0; n <= n_max; ++n) {
      rep.cases.push_back(
          make_case("closed-form " + rn_label("r", r, n), dp[n], closed[n]));
    }
  }
  return rep;
}

namespace {

// Shared shape of the three generating-function cross-checks:
// n! [t^n] base^k / k! against a classical triangle.
IdentityReport gf_check(const char* id, const char* note, int n_max, int k_min,
                        const TruncatedSeries& base,
                        Integer (*table)(int, int)) {
  IdentityReport rep;
  rep.identity = id;
  rep.parameters = "n_max=" + std::to_string(n_max);
  rep.note = note;
  TruncatedSeries power = one_series(n_max);
  for (int j = 0; j < k_min; ++j) power = mul(power, base);
  for (int k = k_min; k <= n_max; ++k) {
    TruncatedSeries gf = scale(power, Rational(Integer(1), factorial(k)));
    Rational fact(1);
    for (int n = 0; n <= n_max; ++n) {
      if (n > 0) fact *= Rational(n);
      if (n < k) continue;
      rep.cases.push_back(make_case(
          "k=" + std::to_string(k) + " n=" + std::to_string(n), gf[n] * fact,
          Rational(table(n, k))));
    }
    power = mul(power, base);
  }
  return rep;
}

Integer lah_table(int n, int k) { return lah(n, k); }
Integer stirling2_table(int n, int k) { return stirling2(n, k); }
Integer stirling1_signed_table(int n, int k) { return stirling1_signed(n, k); }

}  // namespace

IdentityReport verify_eq2(int n_max) {
  if (n_max < 1) {
    throw std::invalid_argument("verify_eq2 requires n_max >= 1");
  }
  // t/(1-t) at order n_max: the denominator is a unit.
  TruncatedSeries base =
      div(monomial_series(1, n_max), one_minus_t_series(n_max));
  return gf_check("eq2",
                  "coefficients of (t/(1-t))^k / k! against the Lah numbers",
                  n_max, 1, base, lah_table);
}

IdentityReport verify_eq6(int n_max) {
  if (n_max < 0) {
    throw std::invalid_argument("verify_eq6 requires n_max >= 0");
  }
  TruncatedSeries base = sub(exp_series(n_max), one_series(n_max));
  return gf_check(
      "eq6",
      "coefficients of (e^t - 1)^k / k! against second-kind Stirling numbers",
      n_max, 0, base, stirling2_table);
}

IdentityReport verify_eq7(int n_max) {
  if (n_max < 0) {
    throw std::invalid_argument("verify_eq7 requires n_max >= 0");
  }
  return gf_check("eq7",
                  "coefficients of (log(1+t))^k / k! against signed "
                  "first-kind Stirling numbers",
                  n_max, 0, log_one_plus_series(n_max),
                  stirling1_signed_table);
}

namespace {

IdentityReport derivative_grid(const char* id, int r_max, int entry_max,
                               int order, bool lowering_branch) {
  if (r_max < 1 || entry_max < 1 || order < 2) {
    throw std::invalid_argument(
        "derivative grid requires r_max, entry_max >= 1 and order >= 2");
  }
  IdentityReport rep;
  rep.identity = id;
  rep.parameters = "r_max=" + std::to_string(r_max) +
                   " entry_max=" + std::to_string(entry_max) +
                   " order=" + std::to_string(order);
  rep.note = lowering_branch
                 ? "t * d/dt lowers the last exponent by one; all applicable "
                   "grid indices"
                 : "(1-t) * d/dt removes a trailing exponent 1; all "
                   "applicable grid indices";
  for (const MultiIndex& k : standard_index_grid(r_max, entry_max)) {
    bool applies = lowering_branch ? (k.last() >= 2)
                                   : (k.last() == 1 && k.depth() >= 2);
    if (!applies) continue;
    IdentityReport one = check_derivative_recurrences(k, order);
    for (const auto& c : one.cases) {
      IdentityCase tagged = c;
      tagged.label = "k=" + k.str() + " " + tagged.label;
      rep.cases.push_back(std::move(tagged));
    }
  }
  return rep;
}

}  // namespace

IdentityReport verify_eq11_grid(int r_max, int entry_max, int order) {
  return derivative_grid("eq11", r_max, entry_max, order, true);
}

IdentityReport verify_eq12_grid(int r_max, int entry_max, int order) {
  return derivative_grid("eq12", r_max, entry_max, order, false);
}

IdentityReport verify_eq13(int r_max, int n_max) {
  if (r_max < 1 || n_max < 0) {
    throw std::invalid_argument("verify_eq13 requires r_max >= 1, n_max >= 0");
  }
  IdentityReport rep;
  rep.identity = "eq13";
  rep.parameters =
      "r_max=" + std::to_string(r_max) + " n_max=" + std::to_string(n_max);
  rep.note =
      "all-ones multiple logarithm: chain dynamic program vs. "
      "(1/r!)(-log(1-t))^r, coefficientwise";
  for (int r = 1; r <= r_max; ++r) {
    TruncatedSeries dp = li_series(MultiIndex::ones(r), n_max);
    TruncatedSeries closed = li_all_ones_closed_form(r, n_max);
    for (int n = 0; n <= n_max; ++n) {
      rep.cases.push_back(make_case(rn_label("r", r, n), dp[n], closed[n]));
    }
  }
  return rep;
}

IdentityReport verify_eq19(int r_max, int n_max) {
  if (r_max < 1 || n_max < r_max) {
    throw std::invalid_argument("verify_eq19 requires 1 <= r_max <= n_max");
  }
  IdentityReport rep;
  rep.identity = "eq19";
  rep.parameters =
      "r_max=" + std::to_string(r_max) + " n_max=" + std::to_string(n_max);
  rep.note = "all-ones multi-Lah numbers against the Lah closed form";
  for (int r = 1; r <= r_max; ++r) {
    auto row = multi_lah_row(MultiIndex::ones(r), n_max);
    for (int n = r; n <= n_max; ++n) {
      rep.cases.push_back(make_case(rn_label("r", r, n),
                                    row[static_cast<size_t>(n)],
                                    Rational(lah(n, r))));
    }
  }
  return rep;
}

std::vector<MultiIndex> standard_index_grid(int r_max, int entry_max) {
  if (r_max < 1 || entry_max < 1) {
    throw std::invalid_argument("index grid requires r_max, entry_max >= 1");
  }
  std::vector<MultiIndex> grid;
  for (int r = 1; r <= r_max; ++r) {
    std::vector<int> current(static_cast<size_t>(r), 1);
    while (true) {
      grid.push_back(MultiIndex(current));
      int pos = r - 1;
      while (pos >= 0 && current[static_cast<size_t>(pos)] == entry_max) {
        current[static_cast<size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++current[static_cast<size_t>(pos)];
    }
  }
  return grid;
}

}  // namespace polynum
