#include "payouts/nice_numbers.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace payouts {

namespace {

// Largest value nice_floor/nice_ceil accept without risking int64 overflow
// in the decade arithmetic below.
constexpr double kMaxInput = 9.0e17;

bool ladder_ok(Money a) {
  if (a >= 10 && a % 5 != 0) return false;
  if (a >= 100 && a % 25 != 0) return false;
  if (a >= 250 && a % 50 != 0) return false;
  return true;
}

// Start of the decade containing v: largest power of ten <= v (v >= 1).
Money decade_of(Money v) {
  Money p = 1;
  while (p <= v / 10) p *= 10;
  return p;
}

Money floor_int(Money v) {
  if (v < 10) return v;
  const Money p = decade_of(v);
  Money step;
  if (p == 10) {
    step = 5;
  } else if (v < 5 * (p / 2)) {  // below 2.5 * p
    step = p / 4;
  } else {
    step = p / 2;
  }
  return v - v % step;
}

Money ceil_int(Money v) {
  if (v <= 1) return 1;
  if (v <= 10) return v;
  const Money p = decade_of(v);
  Money step;
  if (p == 10) {
    step = 5;
  } else if (v <= 5 * (p / 2)) {
    step = p / 4;
  } else {
    step = p / 2;
  }
  return ((v + step - 1) / step) * step;
}

}  // namespace

bool is_nice(Money x) {
  if (x < 0) throw std::invalid_argument("is_nice: negative amount");
  if (x == 0) return false;
  Money a = x;
  while (a % 10 == 0) a /= 10;
  return a <= 1000 && ladder_ok(a);
}

Money nice_floor(double x) {
  if (!(x >= 1.0)) throw std::domain_error("nice_floor: no nice number below 1");
  if (x > kMaxInput) throw std::invalid_argument("nice_floor: amount out of range");
  return floor_int(static_cast<Money>(std::floor(x)));
}

Money nice_floor(Money x) {
  if (x < 1) throw std::domain_error("nice_floor: no nice number below 1");
  return floor_int(x);
}

Money nice_ceil(double x) {
  if (!(x >= 0.0)) throw std::invalid_argument("nice_ceil: negative amount");
  if (x > kMaxInput) throw std::invalid_argument("nice_ceil: amount out of range");
  return ceil_int(static_cast<Money>(std::ceil(x)));
}

Money nice_ceil(Money x) {
  if (x < 0) throw std::invalid_argument("nice_ceil: negative amount");
  return ceil_int(x);
}

std::vector<Money> enumerate_nice(Money lo, Money hi) {
  std::vector<Money> out;
  if (lo > hi) return out;
  Money cur = ceil_int(lo < 1 ? 1 : lo);
  while (cur <= hi) {
    out.push_back(cur);
    cur = ceil_int(cur + 1);
  }
  return out;
}

}  // namespace payouts
