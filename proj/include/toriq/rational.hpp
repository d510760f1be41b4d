#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace toriq {

using Rational = mpq_class;
using Integer = mpz_class;
using IntVec = std::vector<std::int64_t>;
using RatVec = std::vector<Rational>;

// Parses "p", "-p" or "p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

// Throws std::domain_error if q is not an integer or does not fit in int64.
std::int64_t to_int64(const Rational& q);
std::int64_t to_int64(const Integer& z);

inline Rational make_rational(std::int64_t v) {
  Rational q;
  mpz_set_si(q.get_num_mpz_t(), static_cast<long>(v));
  return q;
}

}  // namespace toriq
