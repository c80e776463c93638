#include "primpack/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace primpack {

std::vector<PrimePower> factorize(long long n) {
    if (n <= 0) throw std::invalid_argument("factorize: n must be >= 1");
    std::vector<PrimePower> out;
    for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

int moebius(long long n) {
    if (n <= 0) throw std::invalid_argument("moebius: n must be >= 1");
    auto fac = factorize(n);
    for (const auto& f : fac)
        if (f.exponent > 1) return 0;
    return fac.size() % 2 == 0 ? 1 : -1;
}

// J_q(p) = prod over prime powers n^e || p of (n^(qe) - n^(q(e-1))).
// The empty product gives J_q(1) = 1; for q = 0 every factor vanishes,
// which is exactly the wanted J_0 convention.
long long jordan_totient(int q, long long p) {
    if (q < 0 || p < 1) throw std::invalid_argument("jordan_totient: need q >= 0, p >= 1");
    long long r = 1;
    for (const auto& f : factorize(p)) {
        long long hi = checked_pow(f.prime, q * f.exponent);
        long long lo = checked_pow(f.prime, q * (f.exponent - 1));
        r = checked_mul(r, hi - lo);
    }
    return r;
}

BigInt jordan_totient_big(int q, long long p) {
    if (q < 0 || p < 1) throw std::invalid_argument("jordan_totient_big: need q >= 0, p >= 1");
    BigInt r = 1;
    for (const auto& f : factorize(p)) {
        BigInt base = f.prime;
        BigInt hi = boost::multiprecision::pow(base, static_cast<unsigned>(q) * f.exponent);
        BigInt lo = boost::multiprecision::pow(base, static_cast<unsigned>(q) * (f.exponent - 1));
        r *= hi - lo;
    }
    return r;
}

namespace {
std::mutex stirling_mutex;
// stirling_rows[d][i] = s(d, i); row 0 is {1}.
std::vector<std::vector<BigInt>>& stirling_rows() {
    static std::vector<std::vector<BigInt>> rows{{BigInt(1)}};
    return rows;
}
}  // namespace

BigInt stirling_first(int d, int i) {
    if (d < 0 || i < 0) throw std::invalid_argument("stirling_first: need d, i >= 0");
    if (i > d) return 0;
    std::lock_guard<std::mutex> lock(stirling_mutex);
    auto& rows = stirling_rows();
    while (static_cast<int>(rows.size()) <= d) {
        const auto& prev = rows.back();
        int n = static_cast<int>(rows.size()) - 1;  // prev is row n
        std::vector<BigInt> row(n + 2);
        for (int j = 1; j <= n + 1; ++j) {
            // s(n+1, j) = -n*s(n, j) + s(n, j-1)
            BigInt v = prev[j - 1];
            if (j < static_cast<int>(prev.size())) v -= n * prev[j];
            row[j] = std::move(v);
        }
        row[0] = 0;
        rows.push_back(std::move(row));
    }
    return rows[d][i];
}

BigInt binomial(long long n, long long k) {
    if (k < 0) throw std::invalid_argument("binomial: k must be >= 0");
    if (n < 0 || n < k) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at each step
    }
    return r;
}

double zeta_approx(int d, double tol) {
    if (d < 2) throw std::invalid_argument("zeta_approx: d must be >= 2");
    if (!(tol > 0)) throw std::invalid_argument("zeta_approx: tol must be > 0");
    // Tail after N terms is below (N+1)^(1-d)/(d-1).
    long long n_terms = static_cast<long long>(std::ceil(
        std::pow(tol * (d - 1), -1.0 / (d - 1)))) + 1;
    // Kahan summation, smallest terms first, so the answer stays sharp even
    // when d = 2 needs ~1e9 terms.
    double sum = 0.0, comp = 0.0;
    for (long long n = n_terms; n >= 1; --n) {
        double term = 1.0;
        double x = static_cast<double>(n);
        for (int i = 0; i < d; ++i) term /= x;
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

std::vector<long long> divisors(long long n) {
    if (n <= 0) throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<long long> out{1};
    for (const auto& f : factorize(n)) {
        std::size_t sz = out.size();
        long long pe = 1;
        for (int e = 1; e <= f.exponent; ++e) {
            pe *= f.prime;
            for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace primpack
