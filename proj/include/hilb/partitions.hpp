#pragma once

#include <hilb/rational.hpp>
#include <hilb/tpoly.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hilb::partitions {

using exact::Rational;
using exact::TPoly;

// Weakly decreasing list of positive integers.
class Partition {
public:
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p) : parts(p) { validate(); }
    explicit Partition(std::vector<int> p) : parts(std::move(p)) { validate(); }

    void validate() const {
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts[i] > parts[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    int size() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }

    int mult(int k) const {
        int m = 0;
        for (int p : parts) m += (p == k);
        return m;
    }

    Partition with_part(int k) const {
        std::vector<int> p = parts;
        p.push_back(k);
        std::sort(p.rbegin(), p.rend());
        return Partition(std::move(p));
    }
    // removes one part equal to k; caller must check it exists
    Partition without_part(int k) const {
        std::vector<int> p = parts;
        auto it = std::find(p.begin(), p.end(), k);
        if (it == p.end()) throw std::domain_error("Partition: part not present");
        p.erase(it);
        return Partition(std::move(p));
    }

    Partition conjugate() const {
        std::vector<int> c;
        if (parts.empty()) return Partition();
        c.resize(parts[0], 0);
        for (int p : parts)
            for (int j = 0; j < p; ++j) c[j] += 1;
        return Partition(std::move(c));
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) os << ",";
            os << parts[i];
        }
        os << "]";
        return os.str();
    }

    static Partition parse(const std::string& s) {
        std::vector<int> p;
        size_t i = 0;
        auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
        skip_ws();
        if (i >= s.size() || s[i] != '[') throw std::invalid_argument("Partition: expected '['");
        ++i;
        skip_ws();
        if (i < s.size() && s[i] == ']') return Partition();
        while (true) {
            skip_ws();
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i) throw std::invalid_argument("Partition: expected digit in '" + s + "'");
            p.push_back(std::stoi(s.substr(i, j - i)));
            i = j;
            skip_ws();
            if (i < s.size() && s[i] == ',') {
                ++i;
                continue;
            }
            if (i < s.size() && s[i] == ']') break;
            throw std::invalid_argument("Partition: expected ',' or ']' in '" + s + "'");
        }
        return Partition(std::move(p));
    }

    friend bool operator==(const Partition& x, const Partition& y) { return x.parts == y.parts; }
    friend bool operator!=(const Partition& x, const Partition& y) { return !(x == y); }
    // lexicographic on the part vectors; canonical display order is the reverse
    friend bool operator<(const Partition& x, const Partition& y) { return x.parts < y.parts; }
};

// All partitions of n in reverse lexicographic order: [n] first, [1^n] last.
inline std::vector<Partition> enumerate(int n) {
    if (n < 0) throw std::invalid_argument("enumerate: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

// z(mu) = |Aut(mu)| * prod mu_i
inline long long zmu(const Partition& mu) {
    long long z = 1;
    int run = 1;
    for (int i = 0; i < mu.length(); ++i) {
        z *= mu.parts[i];
        if (i > 0 && mu.parts[i] == mu.parts[i - 1])
            ++run;
        else
            run = 1;
        z *= run;
    }
    return z;
}

// c(lambda; t1, t2) = sum over boxes (i,j) of (j-1) t1 + (i-1) t2.
inline TPoly c_lambda(const Partition& lam) {
    long long a = 0, b = 0;
    for (int i = 0; i < lam.length(); ++i) {
        int row = lam.parts[i];
        a += static_cast<long long>(row) * (row - 1) / 2;  // sum of (j-1)
        b += static_cast<long long>(i) * row;              // (i-1) per box
    }
    TPoly r;
    r.add_term({1, 0}, Rational(a));
    r.add_term({0, 1}, Rational(b));
    return r;
}

namespace detail {

inline std::vector<int> beta_set(const Partition& lam) {
    int l = lam.length();
    std::vector<int> b(l);
    for (int i = 0; i < l; ++i) b[i] = lam.parts[i] + (l - 1 - i);
    return b;  // strictly decreasing
}

inline Partition from_beta(std::vector<int> b) {
    std::sort(b.rbegin(), b.rend());
    int l = static_cast<int>(b.size());
    std::vector<int> p;
    for (int i = 0; i < l; ++i) {
        int part = b[i] - (l - 1 - i);
        if (part > 0) p.push_back(part);
        else if (part < 0) throw std::logic_error("beta set not valid");
    }
    return Partition(std::move(p));
}

}  // namespace detail

// Murnaghan-Nakayama recursion with memoization.
class CharacterTable {
public:
    int n;
    std::map<std::pair<Partition, Partition>, long long> values;

    explicit CharacterTable(int n_) : n(n_) {
        auto ps = enumerate(n);
        for (const auto& lam : ps)
            for (const auto& mu : ps) values[{lam, mu}] = chi(lam, mu);
    }

    long long at(const Partition& lam, const Partition& mu) const {
        auto it = values.find({lam, mu});
        if (it == values.end()) throw std::out_of_range("CharacterTable: bad pair");
        return it->second;
    }

    long long dim(const Partition& lam) const {
        std::vector<int> ones(lam.size(), 1);
        return at(lam, Partition(ones));
    }

    static long long chi(const Partition& lam, const Partition& mu) {
        if (lam.size() != mu.size()) throw std::invalid_argument("character: size mismatch");
        static std::map<std::pair<Partition, Partition>, long long> memo;
        static std::mutex mtx;
        if (lam.empty()) return 1;
        {
            std::lock_guard<std::mutex> lk(mtx);
            auto it = memo.find({lam, mu});
            if (it != memo.end()) return it->second;
        }
        int k = mu.parts[0];
        Partition rest(std::vector<int>(mu.parts.begin() + 1, mu.parts.end()));
        std::vector<int> beta = detail::beta_set(lam);
        long long total = 0;
        for (size_t i = 0; i < beta.size(); ++i) {
            int b = beta[i];
            int bp = b - k;
            if (bp < 0) continue;
            bool occupied = false;
            int height = 0;
            for (size_t j = 0; j < beta.size(); ++j) {
                if (beta[j] == bp) occupied = true;
                if (beta[j] > bp && beta[j] < b) ++height;
            }
            if (occupied) continue;
            std::vector<int> nb = beta;
            nb[i] = bp;
            long long sign = (height % 2 == 0) ? 1 : -1;
            total += sign * chi(detail::from_beta(std::move(nb)), rest);
        }
        {
            std::lock_guard<std::mutex> lk(mtx);
            memo[{lam, mu}] = total;
        }
        return total;
    }
};

inline long long character(const Partition& lam, const Partition& mu) {
    return CharacterTable::chi(lam, mu);
}

}  // namespace hilb::partitions
