#include "primpack/counting.hpp"

#include <numeric>
#include <stdexcept>

#include "primpack/numtheory.hpp"

namespace primpack {

namespace {

void require_pd(long long p, int d, const char* who) {
    if (p < 1 || d < 1)
        throw std::invalid_argument(std::string(who) + ": need p >= 1, d >= 1");
}

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt c_psi_big(long long p, int d) {
    // No composition of p into more than p positive parts.
    if (d > p) return 0;
    BigInt acc = 0;
    for (int i = 1; i <= d; ++i)
        acc += stirling_first(d, i) * jordan_totient_big(i - 1, p);
    BigInt fact = factorial(d - 1);
    if (acc % fact != 0)
        throw std::logic_error("c_psi: Stirling sum not divisible by (d-1)!");
    return acc / fact;
}

}  // namespace

long long c_psi(long long p, int d) {
    require_pd(p, d, "c_psi");
    return to_int64(c_psi_big(p, d), "c_psi");
}

long long c_psi_moebius(long long p, int d) {
    require_pd(p, d, "c_psi_moebius");
    if (d > p) return 0;
    BigInt acc = 0;
    for (long long q : divisors(p)) {
        int mu = moebius(q);
        if (mu == 0) continue;
        acc += mu * binomial(p / q - 1, d - 1);
    }
    return to_int64(acc, "c_psi_moebius");
}

namespace {
void gen_compositions(long long remaining, int parts_left, long long g,
                      long long& count) {
    if (parts_left == 1) {
        if (remaining >= 1 && std::gcd(g, remaining) == 1) ++count;
        return;
    }
    for (long long v = 1; v + (parts_left - 1) <= remaining; ++v)
        gen_compositions(remaining - v, parts_left - 1, std::gcd(g, v), count);
}
}  // namespace

long long c_psi_enumerate(long long p, int d) {
    require_pd(p, d, "c_psi_enumerate");
    if (d > p) return 0;
    if (d == 1) return p == 1 ? 1 : 0;
    long long count = 0;
    gen_compositions(p, d, 0, count);
    return count;
}

long long shell_half_count(int d, long long p) {
    if (d < 2 || p < 1)
        throw std::invalid_argument("shell_half_count: need d >= 2, p >= 1");
    BigInt acc = 0;
    BigInt pow2 = 1;
    for (int j = 1; j <= d && j <= p; ++j) {
        pow2 *= 2;
        acc += pow2 * binomial(d, j) * c_psi_big(p, j);
    }
    if (acc % 2 != 0) throw std::logic_error("shell_half_count: odd full-shell count");
    return to_int64(acc / 2, "shell_half_count");
}

BallStats ball_stats(int d, long long p) {
    if (d < 2 || p < 1)
        throw std::invalid_argument("ball_stats: need d >= 2, p >= 1");
    BigInt count = 0, weighted = 0;
    for (long long i = 1; i <= p; ++i) {
        BigInt s = shell_half_count(d, i);
        count += s;
        weighted += i * s;
    }
    // The per-shell kappa increment p*|S|/d sums to an integer (and in fact
    // each increment is one); divide last so a transcription bug trips here.
    if (weighted % d != 0)
        throw std::logic_error("ball_stats: kappa numerator not divisible by d");
    return BallStats{d, p, to_int64(count, "ball half_count"),
                     to_int64(weighted / d, "ball kappa")};
}

Rational ball_weighted_sum(const std::function<Rational(long long)>& f, int d, long long p) {
    if (d < 2 || p < 1)
        throw std::invalid_argument("ball_weighted_sum: need d >= 2, p >= 1");
    Rational acc = 0;
    BigInt pow2 = 1;
    for (int j = 1; j <= d && j <= p; ++j) {
        pow2 *= 2;
        Rational inner = 0;
        for (long long i = j; i <= p; ++i) inner += f(i) * Rational(c_psi_big(i, j));
        acc += Rational(pow2 * binomial(d, j)) * inner;
    }
    return acc;
}

double cpsi_ratio(int d, long long p, double zeta_tol) {
    if (d < 3) throw std::invalid_argument("cpsi_ratio: d must be >= 3");
    if (p < 1) throw std::invalid_argument("cpsi_ratio: p must be >= 1");
    Rational base = Rational(c_psi_big(p, d) * factorial(d - 1),
                             boost::multiprecision::pow(BigInt(p), d - 1));
    return base.convert_to<double>() * zeta_approx(d, zeta_tol);
}

std::vector<GrowthRow> dimension_growth_report(long long p, const std::vector<int>& dims) {
    if (p < 1) throw std::invalid_argument("dimension_growth_report: p must be >= 1");
    std::vector<GrowthRow> rows;
    rows.reserve(dims.size());
    BigInt twop = boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(p - 1));
    for (int d : dims) {
        if (d < 2) throw std::invalid_argument("dimension_growth_report: each d must be >= 2");
        BallStats bs = ball_stats(d, p);
        BigInt dp = boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(p));
        GrowthRow row;
        row.d = d;
        row.ball_ratio = Rational(BigInt(bs.half_count) * factorial(static_cast<int>(p)),
                                  twop * dp);
        row.kappa_ratio = Rational(BigInt(bs.kappa) * factorial(static_cast<int>(p - 1)),
                                   twop * (dp / d));
        row.combined_ratio = Rational(BigInt(bs.half_count), BigInt(d) * bs.kappa);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace primpack
