#include "cy4/psi.hpp"

#include <algorithm>
#include <mutex>

namespace cy4 {

namespace {

Z factorial(long n) {
    Z r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// (2k-1)!!, with (-1)!! = 1
Z dfact(int k) {
    Z r = 1;
    for (int j = 2 * k - 1; j > 1; j -= 2) r *= j;
    return r;
}

std::mutex memo_mu;
std::map<std::pair<int, std::vector<int>>, Q> memo;

Q dvv(int g, std::vector<int> a);

Q lookup(int g, std::vector<int> a) {
    std::sort(a.begin(), a.end());
    {
        std::lock_guard<std::mutex> lk(memo_mu);
        auto it = memo.find({g, a});
        if (it != memo.end()) return it->second;
    }
    Q v = dvv(g, a);
    std::lock_guard<std::mutex> lk(memo_mu);
    memo.emplace(std::make_pair(g, a), v);
    return v;
}

Q dvv(int g, std::vector<int> a) {
    const int n = static_cast<int>(a.size());
    if (g < 0 || n == 0) return 0;
    long sum = 0;
    for (int x : a) {
        if (x < 0) return 0;
        sum += x;
    }
    if (sum != 3L * g - 3 + n) return 0;
    if (g == 0 && n < 3) return 0;
    if (g == 0 && n == 3) return 1;
    if (g == 1 && n == 1) return Q(1, 24);
    // a is sorted ascending; recurse on the largest index
    int top = a.back();
    if (top == 0) return 0;  // only <tau_0^3>_0 survives, handled above
    a.pop_back();
    const int k = top - 1;
    Q acc = 0;
    for (int j = 0; j < static_cast<int>(a.size()); ++j) {
        std::vector<int> b = a;
        b[j] += k;
        acc += frac(dfact(k + a[j] + 1), dfact(a[j])) * lookup(g, b);
    }
    for (int r = 0; r + 2 <= k + 1 && r <= k - 1; ++r) {
        int s = k - 1 - r;
        Q w = frac(dfact(r + 1) * dfact(s + 1), 2);
        std::vector<int> b = a;
        b.push_back(r);
        b.push_back(s);
        acc += w * lookup(g - 1, b);
        // split the remaining points between two components
        const int m = static_cast<int>(a.size());
        for (int g1 = 0; g1 <= g; ++g1) {
            for (long mask = 0; mask < (1L << m); ++mask) {
                std::vector<int> I{r}, J{s};
                for (int t = 0; t < m; ++t) (mask >> t & 1 ? I : J).push_back(a[t]);
                Q x = lookup(g1, I);
                if (sgn(x) == 0) continue;
                acc += w * x * lookup(g - g1, J);
            }
        }
    }
    return acc / Q(dfact(k + 2));
}

}  // namespace

Q psi_genus0(const std::vector<int>& a) {
    const long n = static_cast<long>(a.size());
    if (n < 3) return 0;
    long sum = 0;
    Z den = 1;
    for (int x : a) {
        if (x < 0) return 0;
        sum += x;
        den *= factorial(x);
    }
    if (sum != n - 3) return 0;
    return frac(factorial(n - 3), den);
}

Q psi_dvv(int g, const std::vector<int>& a) { return lookup(g, a); }

}  // namespace cy4
