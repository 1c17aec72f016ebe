#pragma once

// Twisted Alexander polynomials from Wirtinger presentations. The ring map
// Phi sends generator g to t * to_matrix(color g), so a word of exponent sum
// e maps to t^e times a product of trace-2 matrices and their inverses.
// Delta' is det of the Alexander matrix with one generator's block column
// removed; Delta divides out det Phi(1 - generator) = (1-t)^2, the same for
// every generator.

#include <stdexcept>
#include <vector>

#include "coloring.hpp"
#include "laurent.hpp"
#include "parabolic.hpp"
#include "words.hpp"

namespace knotsum {

template <class K>
using LaurentMat2 = Mat2<Laurent<K>>;

template <class K>
LaurentMat2<K> phi_letter(int gen, int step, const std::vector<ParabolicVec<K>>& gen_colors) {
    if (gen < 0 || gen >= int(gen_colors.size()))
        throw std::runtime_error("generator has no arc color");
    Mat2<K> m = to_matrix(gen_colors[gen]);
    if (step < 0) m = parabolic_inverse(m);
    int e = step < 0 ? -1 : 1;
    return {Laurent<K>::monomial(e, m.a), Laurent<K>::monomial(e, m.b),
            Laurent<K>::monomial(e, m.c), Laurent<K>::monomial(e, m.d)};
}

template <class K>
LaurentMat2<K> phi_word(const GroupWord& w, const std::vector<ParabolicVec<K>>& gen_colors) {
    LaurentMat2<K> acc = LaurentMat2<K>::identity();
    for (auto [gen, exp] : w.letters) {
        int step = exp < 0 ? -1 : 1;
        for (int i = 0; i < std::abs(exp); ++i) acc = acc * phi_letter(gen, step, gen_colors);
    }
    return acc;
}

template <class K>
LaurentMat2<K> phi(const GroupRingElem& e, const std::vector<ParabolicVec<K>>& gen_colors) {
    LaurentMat2<K> acc{};
    for (auto& [w, coeff] : e.terms) {
        Laurent<K> c{K(coeff)};
        LaurentMat2<K> m = phi_word(w, gen_colors);
        acc = acc + LaurentMat2<K>{c * m.a, c * m.b, c * m.c, c * m.d};
    }
    return acc;
}

// (relators) x (generators) array of 2x2 Laurent blocks, block (k, j) =
// Phi(d r_k / d alpha_j).
template <class K>
struct AlexanderMatrix {
    int generators = 0;
    std::vector<std::vector<LaurentMat2<K>>> blocks;  // [relator][generator]

    LaurentMatrix<K> scalar_matrix() const {
        LaurentMatrix<K> m(2 * int(blocks.size()), 2 * generators);
        for (int k = 0; k < int(blocks.size()); ++k)
            for (int j = 0; j < generators; ++j) {
                const LaurentMat2<K>& b = blocks[k][j];
                m.at(2 * k, 2 * j) = b.a;
                m.at(2 * k, 2 * j + 1) = b.b;
                m.at(2 * k + 1, 2 * j) = b.c;
                m.at(2 * k + 1, 2 * j + 1) = b.d;
            }
        return m;
    }
};

template <class K>
AlexanderMatrix<K> alexander_matrix(const Presentation& pres,
                                    const std::vector<ParabolicVec<K>>& gen_colors) {
    if (int(gen_colors.size()) != pres.generators)
        throw std::runtime_error("coloring does not match the presentation's generators");
    AlexanderMatrix<K> m;
    m.generators = pres.generators;
    for (const GroupWord& r : pres.relators) {
        std::vector<LaurentMat2<K>> row;
        for (int j = 0; j < pres.generators; ++j)
            row.push_back(phi(fox_derivative(r, j), gen_colors));
        m.blocks.push_back(std::move(row));
    }
    return m;
}

inline Presentation drop_relator(const Presentation& pres, int k) {
    if (k < 0 || k >= int(pres.relators.size())) throw std::runtime_error("no such relator");
    Presentation out;
    out.generators = pres.generators;
    for (int i = 0; i < int(pres.relators.size()); ++i)
        if (i != k) out.relators.push_back(pres.relators[i]);
    return out;
}

template <class K>
struct TwistedAlexander {
    Laurent<K> delta;        // det M_j / (1-t)^2, canonicalized
    Laurent<K> delta_prime;  // det M_j, canonicalized
    int removed_column = -1;
    double remainder_norm = 0.0;
};

// pres must already have one redundant relator dropped (n generators, n-1
// relators); j is the generator whose block column is removed.
template <class K>
TwistedAlexander<K> twisted_alexander(const Presentation& pres,
                                      const std::vector<ParabolicVec<K>>& gen_colors, int j,
                                      double tol = 1e-9) {
    if (int(pres.relators.size()) + 1 != pres.generators)
        throw std::runtime_error("need one relator fewer than generators");
    if (j < 0 || j >= pres.generators) throw std::runtime_error("no such generator column");
    AlexanderMatrix<K> am = alexander_matrix(pres, gen_colors);
    LaurentMatrix<K> m = am.scalar_matrix().without_columns(2 * j, 2 * j + 1);
    Laurent<K> det = det_laurent(m);
    Laurent<K> den;  // (1 - t)^2
    den.set(0, ScalarOps<K>::one());
    den.set(1, -(ScalarOps<K>::one() + ScalarOps<K>::one()));
    den.set(2, ScalarOps<K>::one());
    auto div = divide(det, den);
    TwistedAlexander<K> out;
    out.removed_column = j;
    out.remainder_norm = div.remainder_norm;
    double scale = std::max(1.0, det.sup_norm());
    if (ScalarOps<K>::exact ? !div.remainder.is_zero() : div.remainder_norm > tol * scale)
        throw ToleranceError("determinant is not divisible by (1-t)^2");
    out.delta = canonicalize(div.quotient, tol);
    out.delta_prime = canonicalize(det, tol);
    return out;
}

template <class K>
Laurent<K> normalized_alexander(const Presentation& pres,
                                const std::vector<ParabolicVec<K>>& gen_colors, int j,
                                double tol = 1e-9) {
    return twisted_alexander(pres, gen_colors, j, tol).delta_prime;
}

}  // namespace knotsum
