#ifndef HFACTOR_BOUNDS_HPP
#define HFACTOR_BOUNDS_HPP

#include "errors.hpp"
#include "shape.hpp"

#include <numeric>
#include <optional>
#include <string>

namespace hfactor {

// Exact rational, normalized, positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw Error("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

struct BoundReport {
    int n;
    FactorShape shape;
    long long guarantee;                           // unconditional greedy guarantee
    std::optional<long long> conditional_guarantee;  // present for cycles only
    long long opt_upper;                           // upper bound on any tournament
};

// Greedy round guarantees.  Clique(2): n/2, plus one when 4 | n.
// Clique(k>=3): floor(n / (k(k-1))).  Cycle(k): floor((n+4)/6)
// unconditionally; conditionally floor((n+2)/4) for even k and
// floor((n+2)/4 - n/(4k)) for odd k.
inline BoundReport guarantee_bound(int n, FactorShape shape) {
    if (n < 1 || n % shape.k != 0)
        throw DivisibilityError("guarantee_bound: k must divide n");
    long long k = shape.k;
    BoundReport rep{n, shape, 0, std::nullopt, 0};
    if (shape.kind == ShapeKind::Clique) {
        rep.opt_upper = (n - 1) / (k - 1);
        if (k == 2)
            rep.guarantee = n / 2 + (n % 4 == 0 ? 1 : 0);
        else
            rep.guarantee = n / (k * (k - 1));
    } else {
        rep.opt_upper = (n - 1) / 2;
        rep.guarantee = (n + 4) / 6;
        // Cycle(3) coincides with Clique(3); the clique formula floor(n/6)
        // never exceeds floor((n+4)/6), so the max is the cycle formula.
        if (k % 2 == 0)
            rep.conditional_guarantee = (n + 2) / 4;
        else
            rep.conditional_guarantee = floor_div(((long long)n + 2) * k - n, 4 * k);
    }
    return rep;
}

struct RatioReport {
    Rational instance;                    // guarantee / opt_upper for this n
    std::optional<Rational> worst_case;   // analytic worst case for this shape
};

// Instance approximation ratio, next to the shape's analytic worst-case
// ratio: (k-1)/(2k^2-3k-1) for cliques with k >= 3, 1/(3+eps) for cycles.
inline RatioReport approx_ratio(int n, FactorShape shape, Rational eps = Rational(1, 1)) {
    BoundReport b = guarantee_bound(n, shape);
    RatioReport r{Rational(b.guarantee, b.opt_upper), std::nullopt};
    long long k = shape.k;
    if (shape.kind == ShapeKind::Clique) {
        if (k >= 3) r.worst_case = Rational(k - 1, 2 * k * k - 3 * k - 1);
    } else {
        // 1/(3+eps) with eps = p/q: q/(3q+p)
        r.worst_case = Rational(eps.den, 3 * eps.den + eps.num);
    }
    return r;
}

} // namespace hfactor

#endif
