#pragma once

// Freely reduced words over generators 0..n-1 and integer group-ring sums,
// enough to state Wirtinger relators and run Fox calculus.

#include <compare>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace knotsum {

// Letters are (generator, exponent) with exponent != 0; adjacent letters with
// the same generator are merged, so the stored form is always reduced.
struct GroupWord {
    std::vector<std::pair<int, int>> letters;

    GroupWord() = default;
    static GroupWord gen(int g, int e = 1) {
        GroupWord w;
        if (e != 0) w.letters.push_back({g, e});
        return w;
    }

    bool is_identity() const { return letters.empty(); }

    GroupWord& append(int g, int e) {
        if (e == 0) return *this;
        if (!letters.empty() && letters.back().first == g) {
            letters.back().second += e;
            if (letters.back().second == 0) letters.pop_back();
        } else {
            letters.push_back({g, e});
        }
        return *this;
    }

    friend GroupWord operator*(const GroupWord& a, const GroupWord& b) {
        GroupWord r = a;
        for (auto [g, e] : b.letters) r.append(g, e);
        return r;
    }

    GroupWord inverse() const {
        GroupWord r;
        for (auto it = letters.rbegin(); it != letters.rend(); ++it)
            r.append(it->first, -it->second);
        return r;
    }

    // Sum of exponents; the abelianized image under every generator -> t.
    int exponent_sum() const {
        int s = 0;
        for (auto [g, e] : letters) s += e;
        return s;
    }

    int max_generator() const {
        int m = -1;
        for (auto [g, e] : letters) m = std::max(m, g);
        return m;
    }

    auto operator<=>(const GroupWord&) const = default;

    std::string str() const {
        if (letters.empty()) return "1";
        std::string s;
        for (auto [g, e] : letters) {
            s += "a" + std::to_string(g + 1);
            if (e != 1) s += "^" + std::to_string(e);
            s += " ";
        }
        s.pop_back();
        return s;
    }
};

// Z[F]: finitely supported integer combinations of reduced words.
struct GroupRingElem {
    std::map<GroupWord, long long> terms;

    static GroupRingElem zero() { return {}; }
    static GroupRingElem one() { return of(GroupWord{}); }
    static GroupRingElem of(const GroupWord& w, long long c = 1) {
        GroupRingElem e;
        if (c != 0) e.terms[w] = c;
        return e;
    }

    GroupRingElem& add(const GroupWord& w, long long c) {
        if (c == 0) return *this;
        auto [it, inserted] = terms.try_emplace(w, 0);
        it->second += c;
        if (it->second == 0) terms.erase(it);
        return *this;
    }

    friend GroupRingElem operator+(const GroupRingElem& a, const GroupRingElem& b) {
        GroupRingElem r = a;
        for (auto& [w, c] : b.terms) r.add(w, c);
        return r;
    }
    friend GroupRingElem operator-(const GroupRingElem& a, const GroupRingElem& b) {
        GroupRingElem r = a;
        for (auto& [w, c] : b.terms) r.add(w, -c);
        return r;
    }
    friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
        GroupRingElem r;
        for (auto& [wa, ca] : a.terms)
            for (auto& [wb, cb] : b.terms) r.add(wa * wb, ca * cb);
        return r;
    }

    bool operator==(const GroupRingElem&) const = default;
};

// Fox derivative d(word)/d(generator j): d(uv) = du + u dv, d(a_j) = 1,
// d(a_j^-1) = -a_j^-1, d(a_k^{+-1}) = 0 for k != j.
inline GroupRingElem fox_derivative(const GroupWord& w, int j) {
    GroupRingElem out;
    GroupWord prefix;
    for (auto [g, e] : w.letters) {
        int step = e > 0 ? 1 : -1;
        for (int i = 0; i != e; i += step) {
            if (g == j) {
                if (step > 0) {
                    out.add(prefix, 1);
                } else {
                    GroupWord p = prefix;
                    p.append(g, -1);
                    out.add(p, -1);
                }
            }
            prefix.append(g, step);
        }
    }
    return out;
}

}  // namespace knotsum
