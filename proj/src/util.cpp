#include "hypermod/util.hpp"

#include <numeric>

namespace hm {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> primes_in(long lo, long hi) {
    std::vector<long> out;
    for (long n = std::max(lo, 2L); n <= hi; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

long inv_mod(long a, long m) {
    long r0 = mod_norm(a, m), r1 = m, s0 = 1, s1 = 0;
    while (r1 != 0) {
        long q = r0 / r1;
        long t = r0 - q * r1; r0 = r1; r1 = t;
        t = s0 - q * s1; s0 = s1; s1 = t;
    }
    if (r0 != 1) throw std::invalid_argument("inv_mod: not coprime");
    return mod_norm(s0, m);
}

long pow_mod(long a, long e, long m) {
    long r = 1 % m;
    a = mod_norm(a, m);
    while (e > 0) {
        if (e & 1) r = (long)((__int128)r * a % m);
        a = (long)((__int128)a * a % m);
        e >>= 1;
    }
    return r;
}

int kronecker(long a, long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign;
    }
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        // (a|2) factor per power of two
        int a8 = (int)mod_norm(a, 8);
        int two = (a8 == 1 || a8 == 7) ? 1 : -1;
        int e = 0;
        while (n % 2 == 0) { n /= 2; ++e; }
        if (e % 2 == 1 && two == -1) sign = -sign;
    }
    a = mod_norm(a, n);
    // Jacobi symbol (a|n), n odd positive
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long n8 = n % 8;
            if (n8 == 3 || n8 == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    if (n != 1) return 0;
    return sign * result;
}

namespace {
std::vector<long> prime_factors(long n) {
    std::vector<long> f;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            f.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) f.push_back(n);
    return f;
}
}  // namespace

long primitive_root(long p) { return next_primitive_root(p, 1); }

long next_primitive_root(long p, long g0) {
    if (p == 2) return 1;
    auto fac = prime_factors(p - 1);
    for (long g = g0 + 1; g < p; ++g) {
        bool ok = true;
        for (long q : fac)
            if (pow_mod(g, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::runtime_error("next_primitive_root: none found");
}

Rat parse_rat(const std::string& s) {
    Rat x;
    if (x.set_str(s, 10) != 0) throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
    x.canonicalize();
    return x;
}

std::string rat_str(const Rat& x) { return x.get_str(); }

bool rat_is_integer(const Rat& x) { return x.get_den() == 1; }

Rat frac_part(const Rat& x) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    Rat r = x - Rat(fl);
    r.canonicalize();
    return r;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace hm
