#include "polynum/multilog.hpp"

#include <stdexcept>

#include "polynum/config.hpp"
#include "polynum/integer.hpp"

namespace polynum {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw std::invalid_argument("multi-index must be nonempty");
  }
  for (size_t i = 0; i + 1 < entries_.size(); ++i) {
    if (entries_[i] < 1) {
      throw std::invalid_argument(
          "only the last multi-index entry may be nonpositive, got " +
          std::to_string(entries_[i]) + " at position " + std::to_string(i + 1));
    }
  }
}

MultiIndex MultiIndex::parse(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("empty multi-index");
  }
  std::vector<int> entries;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string piece = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    bool is_last = (comma == std::string::npos);
    if (piece.empty()) {
      throw std::invalid_argument("malformed multi-index \"" + text + "\"");
    }
    size_t digits_from = 0;
    if (piece[0] == '-') {
      if (!is_last) {
        throw std::invalid_argument(
            "negative entries are allowed only in the last multi-index "
            "position: \"" +
            text + "\"");
      }
      digits_from = 1;
    }
    if (digits_from == piece.size()) {
      throw std::invalid_argument("malformed multi-index \"" + text + "\"");
    }
    for (size_t i = digits_from; i < piece.size(); ++i) {
      if (piece[i] < '0' || piece[i] > '9') {
        throw std::invalid_argument("malformed multi-index \"" + text + "\"");
      }
    }
    long value = std::stol(piece);
    if (value > 1'000'000 || value < -1'000'000) {
      throw std::invalid_argument("multi-index entry out of range: " + piece);
    }
    entries.push_back(static_cast<int>(value));
    if (is_last) break;
    pos = comma + 1;
  }
  return MultiIndex(std::move(entries));
}

MultiIndex MultiIndex::ones(int r) {
  if (r < 1) {
    throw std::invalid_argument("multi-index depth must be >= 1");
  }
  return MultiIndex(std::vector<int>(static_cast<size_t>(r), 1));
}

bool MultiIndex::is_standard() const {
  for (int e : entries_) {
    if (e < 1) return false;
  }
  return true;
}

bool MultiIndex::all_ones() const {
  for (int e : entries_) {
    if (e != 1) return false;
  }
  return true;
}

MultiIndex MultiIndex::drop_last() const {
  if (depth() < 2) {
    throw std::invalid_argument("cannot drop the only multi-index entry");
  }
  return MultiIndex(std::vector<int>(entries_.begin(), entries_.end() - 1));
}

MultiIndex MultiIndex::with_last(int value) const {
  std::vector<int> e = entries_;
  e.back() = value;
  return MultiIndex(std::move(e));
}

std::string MultiIndex::str() const {
  std::string out;
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(entries_[i]);
  }
  return out;
}

namespace {

// m^{-k} as an exact rational; m >= 1, k any integer.
Rational inverse_power(long m, int k) {
  if (k >= 0) {
    return Rational(Integer(1), pow(Integer(m), k));
  }
  return Rational(pow(Integer(m), -k));
}

}  // namespace

TruncatedSeries li_series(const MultiIndex& k, int order) {
  if (order < 0) {
    throw std::invalid_argument("li_series requires order >= 0");
  }
  require_within_cap(order, "multiple logarithm series");
  int r = k.depth();
  // layer[n] = f_j(n); starts at depth 1, deepens one slot at a time.
  std::vector<Rational> layer(static_cast<size_t>(order) + 1, Rational(0));
  for (int n = 1; n <= order; ++n) {
    layer[static_cast<size_t>(n)] = inverse_power(n, k.entry(0));
  }
  for (int j = 1; j < r; ++j) {
    std::vector<Rational> next(static_cast<size_t>(order) + 1, Rational(0));
    Rational prefix(0);  // sum of layer[1..n-1]
    for (int n = 1; n <= order; ++n) {
      if (!prefix.is_zero()) {
        next[static_cast<size_t>(n)] = inverse_power(n, k.entry(j)) * prefix;
      }
      prefix += layer[static_cast<size_t>(n)];
    }
    layer = std::move(next);
  }
  layer[0] = Rational(0);
  return TruncatedSeries(std::move(layer));
}

TruncatedSeries li_all_ones_closed_form(int r, int order) {
  if (r < 1) {
    throw std::invalid_argument("li_all_ones_closed_form requires r >= 1");
  }
  require_within_cap(order, "all-ones closed form");
  TruncatedSeries powed = pow(neg_log_one_minus_series(order), r);
  return scale(powed, Rational(Integer(1), factorial(r)));
}

IdentityReport check_derivative_recurrences(const MultiIndex& k, int order) {
  if (!k.is_standard()) {
    throw std::invalid_argument(
        "derivative recurrences are stated for standard-mode indices");
  }
  if (order < 2) {
    throw std::invalid_argument(
        "derivative recurrence check needs order >= 2 to compare anything");
  }
  IdentityReport rep;
  rep.parameters = "index=" + k.str() + " order=" + std::to_string(order);
  TruncatedSeries deriv = diff(li_series(k, order));  // order-1
  TruncatedSeries lhs(0), rhs(0);
  if (k.last() >= 2) {
    rep.identity = "eq11";
    rep.note =
        "t * d/dt of the multiple logarithm equals the series with the last "
        "exponent lowered by one";
    lhs = mul(monomial_series(1, order - 1), deriv);
    rhs = li_series(k.with_last(k.last() - 1), order - 1);
  } else if (k.depth() >= 2) {  // last entry == 1
    rep.identity = "eq12";
    rep.note =
        "(1-t) * d/dt of the multiple logarithm equals the series of the "
        "index with the last slot removed";
    lhs = mul(one_minus_t_series(order - 1), deriv);
    rhs = li_series(k.drop_last(), order - 1);
  } else {
    throw std::invalid_argument(
        "no derivative-recurrence branch applies to index (" + k.str() +
        "): the lowering branch needs a last entry >= 2, the shortening "
        "branch needs depth >= 2");
  }
  for (int m = 0; m <= order - 1; ++m) {
    rep.cases.push_back(make_case("t^" + std::to_string(m), lhs[m], rhs[m]));
  }
  return rep;
}

}  // namespace polynum
