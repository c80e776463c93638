#include "primpack/packing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "primpack/checked.hpp"

namespace primpack {

namespace {

struct ShellWindow {
    long long p;           // shell index
    long long count_prev;  // |B(d,p-1)|, with |B(d,0)| := 0
    long long kappa_prev;  // kappa(B(d,p-1)), with kappa(B(d,0)) := 0
    long long kappa_cur;   // kappa(B(d,p))
};

long long kappa_increment(int d, long long p, long long shell) {
    long long num = checked_mul(p, shell);
    if (num % d != 0) throw std::logic_error("kappa increment p*|S|/d not integral");
    return num / d;
}

// Walk shells upward until kappa(B(d,p)) exceeds k.
ShellWindow find_window(int d, long long k) {
    if (d < 2) throw std::invalid_argument("packing: d must be >= 2");
    if (k < 1) throw std::invalid_argument("packing: k must be >= 1");
    long long count = 0, kap = 0, p = 0;
    for (;;) {
        ++p;
        long long shell = shell_half_count(d, p);
        long long next = checked_add(kap, kappa_increment(d, p, shell));
        if (k < next) return {p, count, kap, next};
        count = checked_add(count, shell);
        kap = next;
    }
}

}  // namespace

long long locate_shell(int d, long long k) { return find_window(d, k).p; }

Rational lambda_value(int d, long long k) {
    ShellWindow w = find_window(d, k);
    return Rational(w.count_prev) +
           Rational(BigInt(k - w.kappa_prev) * d, BigInt(w.p));
}

namespace {

bool exceptional_in_window(int d, const ShellWindow& w, long long k) {
    const long long c1 = k - w.kappa_prev;
    const long long c2 = w.kappa_cur - k;
    if (d > 2) {
        if (w.p % d != 0 || w.p == d) return false;  // d must divide p properly
        const long long m = w.p / d;
        return c1 == m || c2 == m;
    }
    // d == 2: only even shells above 2 contribute.
    if (w.p % 2 != 0 || w.p == 2) return false;
    const long long half = w.p / 2;
    if (w.p % 4 == 0) return c1 % half == 0 && (c1 / half) % 2 == 1;
    return c1 == half || c2 == half;
}

}  // namespace

bool is_exceptional(int d, long long k) {
    return exceptional_in_window(d, find_window(d, k), k);
}

PackingAnswer delta_z(int d, long long k) {
    ShellWindow w = find_window(d, k);
    Rational lambda = Rational(w.count_prev) +
                      Rational(BigInt(k - w.kappa_prev) * d, BigInt(w.p));
    bool exc = exceptional_in_window(d, w, k);
    long long delta = floor_rational(lambda) - (exc ? 1 : 0);
    return PackingAnswer{d, k, w.p, std::move(lambda), exc, delta};
}

std::vector<long long> exceptions_up_to(int d, long long K) {
    if (d < 2) throw std::invalid_argument("exceptions_up_to: d must be >= 2");
    if (K < 1) throw std::invalid_argument("exceptions_up_to: K must be >= 1");
    std::vector<long long> out;
    long long count = 0, kap = 0, p = 0;
    while (kap <= K) {
        ++p;
        long long shell = shell_half_count(d, p);
        long long next = checked_add(kap, kappa_increment(d, p, shell));
        if (d > 2) {
            if (p % d == 0 && p != d) {
                const long long m = p / d;
                for (long long cand : {kap + m, next - m})
                    if (cand <= K) out.push_back(cand);
            }
        } else if (p % 2 == 0 && p != 2) {
            const long long half = p / 2;
            if (p % 4 == 0) {
                for (long long c1 = half; c1 < next - kap; c1 += 2 * half)
                    if (kap + c1 <= K) out.push_back(kap + c1);
            } else {
                for (long long cand : {kap + half, next - half})
                    if (cand <= K) out.push_back(cand);
            }
        }
        count = checked_add(count, shell);
        kap = next;
    }
    (void)count;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DensityReport exception_density_report(int d, long long K) {
    auto exc = exceptions_up_to(d, K);
    double count = static_cast<double>(exc.size());
    double ratio;
    if (d == 2)
        ratio = count / static_cast<double>(K);
    else
        ratio = count / std::pow(static_cast<double>(K), 1.0 / (d + 1));
    return DensityReport{static_cast<long long>(exc.size()), ratio};
}

}  // namespace primpack
