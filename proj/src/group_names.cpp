#include "pde/group_names.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace pde {

QuotientTable quotient_table(const SignedGroup& G, const Bitset& gamma, const Bitset& normal) {
    std::vector<int> members = gamma.to_indices();
    std::vector<int> coset_of(G.order(), -1);
    std::vector<int> reps;
    for (int x : members) {
        if (coset_of[x] >= 0) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int h : normal.to_indices()) coset_of[G.mult(x, h)] = id;
    }
    QuotientTable t;
    const int q = static_cast<int>(reps.size());
    t.mult.assign(q, std::vector<int>(q));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            int c = coset_of[G.mult(reps[a], reps[b])];
            if (c < 0) throw structure_error("subgroup is not normal in the quotient construction");
            t.mult[a][b] = c;
        }
    return t;
}

namespace {

int table_element_order(const QuotientTable& t, int a) {
    int x = a, k = 1;
    while (x != 0) {
        x = t.mult[x][a];
        ++k;
    }
    return k;
}

bool table_abelian(const QuotientTable& t) {
    for (int a = 0; a < t.order(); ++a)
        for (int b = a + 1; b < t.order(); ++b)
            if (t.mult[a][b] != t.mult[b][a]) return false;
    return true;
}

std::map<int, int> order_multiset(const QuotientTable& t) {
    std::map<int, int> m;
    for (int a = 0; a < t.order(); ++a) ++m[table_element_order(t, a)];
    return m;
}

// order multiset of a direct product of cyclic groups
std::map<int, int> cyclic_product_orders(const std::vector<int>& factors) {
    std::map<int, int> acc{{1, 1}};
    for (int f : factors) {
        std::map<int, int> next;
        for (auto [o1, c1] : acc)
            for (int x = 0; x < f; ++x) {
                int o2 = f / std::gcd(f, x);
                next[std::lcm(o1, o2)] += c1;
            }
        acc = std::move(next);
    }
    return acc;
}

void prime_power_partitions(int p, int exp, std::vector<std::vector<int>>& out) {
    // all multisets of exponents summing to exp, as cyclic factor sizes p^e
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
        if (remaining == 0) {
            std::vector<int> factors;
            for (int e : cur) {
                int v = 1;
                for (int i = 0; i < e; ++i) v *= p;
                factors.push_back(v);
            }
            out.push_back(factors);
            return;
        }
        for (int part = std::min(remaining, maxpart); part >= 1; --part) {
            cur.push_back(part);
            rec(remaining - part, part);
            cur.pop_back();
        }
    };
    rec(exp, exp);
}

std::string abelian_name(const QuotientTable& t) {
    const int n = t.order();
    std::map<int, int> want = order_multiset(t);
    // candidate abelian groups: product over primes of partition choices
    std::vector<std::pair<int, int>> primefac;
    {
        int m = n;
        for (int p = 2; p * p <= m; ++p)
            if (m % p == 0) {
                int e = 0;
                while (m % p == 0) {
                    m /= p;
                    ++e;
                }
                primefac.push_back({p, e});
            }
        if (m > 1) primefac.push_back({m, 1});
    }
    std::vector<std::vector<std::vector<int>>> options;
    for (auto [p, e] : primefac) {
        std::vector<std::vector<int>> parts;
        prime_power_partitions(p, e, parts);
        options.push_back(parts);
    }
    std::vector<int> pick(options.size(), 0);
    for (;;) {
        std::vector<int> factors;
        for (size_t i = 0; i < options.size(); ++i)
            factors.insert(factors.end(), options[i][pick[i]].begin(), options[i][pick[i]].end());
        if (cyclic_product_orders(factors) == want) {
            // invariant factor form: combine the largest power of each prime
            std::vector<std::vector<int>> per_prime;
            for (size_t i = 0; i < options.size(); ++i) {
                auto v = options[i][pick[i]];
                std::sort(v.rbegin(), v.rend());
                per_prime.push_back(v);
            }
            size_t len = 0;
            for (auto& v : per_prime) len = std::max(len, v.size());
            std::vector<long long> invf(len, 1);
            for (auto& v : per_prime)
                for (size_t j = 0; j < v.size(); ++j) invf[j] *= v[j];
            std::string name;
            for (size_t j = 0; j < len; ++j) {
                if (j) name += "x";
                name += "Z" + std::to_string(invf[j]);
            }
            return name;
        }
        size_t i = 0;
        while (i < pick.size() && ++pick[i] == static_cast<int>(options[i].size())) {
            pick[i] = 0;
            ++i;
        }
        if (i == pick.size()) break;
    }
    return "Ab" + std::to_string(n);
}

bool is_dihedral(const QuotientTable& t) {
    const int n = t.order();
    if (n % 2 || n < 6) return false;
    const int m = n / 2;
    // look for an element of order m whose complement consists of involutions
    for (int rot = 0; rot < n; ++rot) {
        if (table_element_order(t, rot) != m) continue;
        std::vector<char> in_cyc(n, 0);
        int x = 0;
        for (int k = 0; k < m; ++k) {
            in_cyc[x] = 1;
            x = t.mult[x][rot];
        }
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            if (!in_cyc[a] && table_element_order(t, a) != 2) ok = false;
        if (ok) return true;
    }
    return false;
}

}  // namespace

std::string group_name(const QuotientTable& t) {
    const int n = t.order();
    if (n == 1) return "Z1";
    if (table_abelian(t)) return abelian_name(t);
    if (n == 6) return "S3";
    int involutions = 0;
    for (int a = 1; a < n; ++a)
        if (table_element_order(t, a) == 2) ++involutions;
    if (n == 8 && involutions == 1) return "Q";
    if (is_dihedral(t)) return "D" + std::to_string(n / 2);
    auto orders = order_multiset(t);
    if (n == 12 && involutions == 3) return "A4";
    if (n == 12 && involutions == 1) return "Dic3";
    if (n == 24 && involutions == 9 && orders[4] == 6) return "S4";
    if (n == 24 && involutions == 1 && orders[6] == 8) return "Dic6";
    if (n == 60 && involutions == 15) return "A5";
    if (n == 120 && involutions == 25) return "S5";
    if (n == 120 && involutions == 31) return "A5xZ2";
    if (n == 240 && involutions == 51) return "S5xZ2";
    return "G" + std::to_string(n) + "_i" + std::to_string(involutions);
}

std::string subgroup_name(const SignedGroup& G, const Bitset& members) {
    Bitset trivial(G.order());
    trivial.set(0);
    return group_name(quotient_table(G, members, trivial));
}

}  // namespace pde
