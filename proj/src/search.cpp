#include "etaforge/search.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "etaforge/parallel.hpp"
#include "json.hpp"

namespace etaforge {

namespace {

std::vector<Int> euler_int(long d, long n) {
    std::vector<Int> c(static_cast<size_t>(n), Int(0));
    c[0] = 1;
    for (long j = 1;; ++j) {
        long g1 = d * j * (3 * j - 1) / 2;
        long g2 = d * j * (3 * j + 1) / 2;
        if (g1 >= n && g2 >= n) break;
        int s = (j % 2 == 0) ? 1 : -1;
        if (g1 < n) c[static_cast<size_t>(g1)] += s;
        if (g2 < n) c[static_cast<size_t>(g2)] += s;
    }
    return c;
}

std::vector<Int> imul(const std::vector<Int>& a, const std::vector<Int>& b, long n) {
    std::vector<Int> r(static_cast<size_t>(n), Int(0));
    long la = std::min<long>(static_cast<long>(a.size()), n);
    for (long i = 0; i < la; ++i) {
        const Int& x = a[static_cast<size_t>(i)];
        if (x == 0) continue;
        long lim = std::min<long>(static_cast<long>(b.size()), n - i);
        for (long j = 0; j < lim; ++j) {
            const Int& y = b[static_cast<size_t>(j)];
            if (y == 0) continue;
            r[static_cast<size_t>(i + j)] += x * y;
        }
    }
    return r;
}

// inverse of a series with leading coefficient 1
std::vector<Int> iinv(const std::vector<Int>& a, long n) {
    std::vector<Int> r(static_cast<size_t>(n), Int(0));
    r[0] = 1;
    for (long m = 1; m < n; ++m) {
        Int s(0);
        long lim = std::min<long>(m, static_cast<long>(a.size()) - 1);
        for (long j = 1; j <= lim; ++j) {
            const Int& y = a[static_cast<size_t>(j)];
            if (y == 0) continue;
            s += y * r[static_cast<size_t>(m - j)];
        }
        r[static_cast<size_t>(m)] = -s;
    }
    return r;
}

class EulerPowCache {
  public:
    explicit EulerPowCache(long n) : n_(n) {}

    const std::vector<Int>& get(long d, long e) {
        auto key = std::make_pair(d, e);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        std::vector<Int> v;
        if (e == 0) {
            v.assign(static_cast<size_t>(n_), Int(0));
            v[0] = 1;
        } else if (e == 1) {
            v = euler_int(d, n_);
        } else if (e == -1) {
            v = iinv(euler_int(d, n_), n_);
        } else if (e > 0) {
            v = imul(get(d, e - 1), get(d, 1), n_);
        } else {
            v = imul(get(d, e + 1), get(d, -1), n_);
        }
        return cache_.emplace(std::move(key), std::move(v)).first->second;
    }

    std::vector<Int> quotient(const EtaExponents& e) {
        std::vector<Int> c(static_cast<size_t>(n_), Int(0));
        c[0] = 1;
        const long divisors[4] = {1, 2, 5, 10};
        for (int i = 0; i < 4; ++i) {
            if (e[static_cast<size_t>(i)] == 0) continue;
            c = imul(c, get(divisors[i], e[static_cast<size_t>(i)]), n_);
        }
        return c;
    }

  private:
    long n_;
    std::map<std::pair<long, long>, std::vector<Int>> cache_;
};

long leading_exponent(const EtaExponents& e) {
    long weight = e[0] + 2 * e[1] + 5 * e[2] + 10 * e[3];
    if (weight % 24 != 0) throw std::invalid_argument("eta quotient weight not divisible by 24");
    return weight / 24;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

DivisibilityResult divisibility_from_coeffs(long w, const std::vector<Int>& c, const Int& b,
                                            long n) {
    DivisibilityResult res;
    res.pass = true;
    res.prime_stress = true;
    Int t;
    for (long i = 0; i < static_cast<long>(c.size()); ++i) {
        long j = w + i;
        if (j >= n) break;
        const Int& cj = c[static_cast<size_t>(i)];
        if (j == 0) {
            if (cj != 0) {
                res.pass = false;
                if (!res.failing_exponent) res.failing_exponent = 0;
            }
            continue;
        }
        if (cj == 0) continue;
        t = b * cj;
        if (!mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(j > 0 ? j : -j))) {
            res.pass = false;
            if (!res.failing_exponent) res.failing_exponent = j;
            if (j >= 2 && is_prime(j) && gcd(Int(j), b) == 1) res.prime_stress = false;
        }
    }
    return res;
}

Int minimal_from_coeffs(long w, const std::vector<Int>& c, long n) {
    Int b(1);
    for (long i = 0; i < static_cast<long>(c.size()); ++i) {
        long j = w + i;
        if (j >= n) break;
        const Int& cj = c[static_cast<size_t>(i)];
        if (j == 0) {
            if (cj != 0) throw NoPassingMultiplier("nonzero constant term");
            continue;
        }
        if (cj == 0) continue;
        Int ja(j > 0 ? j : -j);
        Int g = gcd(ja, cj);
        b = lcm(b, Int(ja / g));
    }
    return b;
}

} // namespace

std::pair<long, std::vector<Int>> integer_eta_expansion(const EtaExponents& e, long end) {
    long w = leading_exponent(e);
    long len = end - w;
    if (len <= 0) return {w, {}};
    EulerPowCache cache(len);
    return {w, cache.quotient(e)};
}

DivisibilityResult divisibility_test(const EtaExponents& e, const Int& b, long n) {
    if (b <= 0) throw std::invalid_argument("multiplier must be positive");
    auto [w, c] = integer_eta_expansion(e, n);
    return divisibility_from_coeffs(w, c, b, n);
}

Int minimal_multiplier(const EtaExponents& e, const Int& b_bound, long n) {
    auto [w, c] = integer_eta_expansion(e, n);
    Int b = minimal_from_coeffs(w, c, n);
    if (!mpz_divisible_p(b_bound.get_mpz_t(), b.get_mpz_t()))
        throw NoPassingMultiplier("minimal multiplier " + b.get_str() +
                                  " does not divide the bound " + b_bound.get_str());
    return b;
}

std::vector<SearchHit> search_level10(long e_max, const Int& b, long n, int jobs) {
    if (e_max < 0) throw std::invalid_argument("exponent bound must be nonnegative");
    if (b <= 0) throw std::invalid_argument("multiplier must be positive");
    std::vector<EtaExponents> candidates;
    for (long e1 = -e_max; e1 <= e_max; ++e1)
        for (long e2 = -e_max; e2 <= e_max; ++e2)
            for (long e5 = -e_max; e5 <= e_max; ++e5) {
                long e10 = 4 - e1 - e2 - e5;
                if (e10 < -e_max || e10 > e_max) continue;
                EtaExponents e = {e1, e2, e5, e10};
                if (!is_admissible(e)) continue;
                candidates.push_back(e);
            }

    // first stage: cheap truncation with one shared power cache
    const long stage = std::min<long>(64, n);
    long wmin = 0;
    for (const auto& e : candidates) wmin = std::min(wmin, leading_exponent(e));
    EulerPowCache cache1(std::max(stage - wmin, 1L));
    std::vector<long> survivors;
    for (long i = 0; i < static_cast<long>(candidates.size()); ++i) {
        const EtaExponents& e = candidates[static_cast<size_t>(i)];
        long w = leading_exponent(e);
        auto c = cache1.quotient(e);
        if (divisibility_from_coeffs(w, c, b, stage).pass) survivors.push_back(i);
    }

    // second stage: full truncation per survivor
    std::vector<std::optional<SearchHit>> slots(survivors.size());
    parallel_for(static_cast<long>(survivors.size()), jobs, [&](long si) {
        const EtaExponents& e = candidates[static_cast<size_t>(survivors[static_cast<size_t>(si)])];
        long w = leading_exponent(e);
        EulerPowCache cache(std::max(n - w, 1L));
        auto c = cache.quotient(e);
        if (!divisibility_from_coeffs(w, c, b, n).pass) return;
        SearchHit hit;
        hit.e = e;
        hit.minimal_b = minimal_from_coeffs(w, c, n);
        hit.truncation = n;
        hit.status = "candidate";
        try {
            ParamExponents a = e_to_a(e);
            hit.a = a;
            if (is_rational_quick(a)) hit.status = "certified";
        } catch (const NonIntegralParams&) {
        }
        slots[static_cast<size_t>(si)] = std::move(hit);
    });

    std::vector<SearchHit> hits;
    for (auto& s : slots)
        if (s) hits.push_back(std::move(*s));
    return hits;
}

std::vector<ParamExponents> scan_a(long range, int jobs) {
    if (range < 0) throw std::invalid_argument("range must be nonnegative");
    const long side = 2 * range + 1;
    const long count = side * side * side;
    std::vector<char> good(static_cast<size_t>(count), 0);
    parallel_for(count, jobs, [&](long i) {
        long a1 = i / (side * side) - range;
        long a2 = (i / side) % side - range;
        long a3 = i % side - range;
        ParamExponents a = {-(a1 + a2 + a3), a1, a2, a3};
        if (is_rational_quick(a)) good[static_cast<size_t>(i)] = 1;
    });
    std::vector<ParamExponents> out;
    for (long i = 0; i < count; ++i) {
        if (!good[static_cast<size_t>(i)]) continue;
        long a1 = i / (side * side) - range;
        long a2 = (i / side) % side - range;
        long a3 = i % side - range;
        out.push_back({-(a1 + a2 + a3), a1, a2, a3});
    }
    return out;
}

std::string search_hit_to_json(const SearchHit& hit) {
    nlohmann::json j;
    j["e"] = hit.e;
    if (hit.a)
        j["a"] = *hit.a;
    else
        j["a"] = nullptr;
    j["minimal_b"] = hit.minimal_b.get_str();
    j["N"] = hit.truncation;
    j["status"] = hit.status;
    return j.dump();
}

} // namespace etaforge
