#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hm {

using Int = mpz_class;
using Rat = mpq_class;

bool is_prime(long n);
std::vector<long> primes_in(long lo, long hi);

// Extended-Euclid inverse of a modulo m, 0 < m.  Throws if gcd(a,m) != 1.
long inv_mod(long a, long m);
long pow_mod(long a, long e, long m);

// Kronecker symbol (a|n) for n >= 0, extended by (a|0) in {0,1}.
int kronecker(long a, long n);

// Least primitive root modulo an odd prime p.
long primitive_root(long p);
// Next primitive root strictly above g0.
long next_primitive_root(long p, long g0);

Rat parse_rat(const std::string& s);
std::string rat_str(const Rat& x);
bool rat_is_integer(const Rat& x);

// a mod m normalized to [0, m)
inline long mod_norm(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

// Fractional part of a rational in [0,1).
Rat frac_part(const Rat& x);

// FNV-1a, stable across runs; used for cache keys.
std::uint64_t fnv1a(const std::string& s);

}  // namespace hm
