#include "schub/gz.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "schub/flag.hpp"

namespace schub {

namespace {

void require_weakly_increasing(const Weight& lambda) {
    if (lambda.empty()) throw std::domain_error("gz: empty weight");
    for (size_t i = 0; i + 1 < lambda.size(); ++i)
        if (lambda[i] > lambda[i + 1])
            throw std::domain_error("gz: weight must be weakly increasing");
}

void require_strictly_increasing(const Weight& lambda) {
    for (size_t i = 0; i + 1 < lambda.size(); ++i)
        if (lambda[i] >= lambda[i + 1])
            throw std::domain_error("gz: weight must be strictly increasing");
}

}  // namespace

bool is_valid_pattern(const GZPattern& p) {
    int n = p.n();
    if (static_cast<int>(p.rows.size()) != n) return false;
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(p.rows[i].size()) != n - i) return false;
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < n - i; ++j)
            if (p.rows[i][j] < p.rows[i - 1][j] || p.rows[i][j] > p.rows[i - 1][j + 1]) return false;
    return true;
}

KoganFace::KoganFace(int rank, std::vector<std::pair<int, int>> eqs)
    : n(rank), equalities(std::move(eqs)) {
    if (n < 1) throw std::invalid_argument("KoganFace: rank must be positive");
    std::sort(equalities.begin(), equalities.end());
    for (size_t t = 0; t < equalities.size(); ++t) {
        auto [i, j] = equalities[t];
        if (i < 1 || j < 1 || i + j > n)
            throw std::invalid_argument("KoganFace: equality position out of range");
        if (t > 0 && equalities[t] == equalities[t - 1])
            throw std::invalid_argument("KoganFace: duplicate equality");
    }
}

BigInt weyl_dimension(const Weight& lambda) {
    require_weakly_increasing(lambda);
    int n = static_cast<int>(lambda.size());
    Rat dim(1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            dim *= Rat(BigInt(lambda[j - 1] - lambda[i - 1] + j - i), BigInt(j - i));
    return dim.as_integer();
}

namespace {

void pattern_rec(int i, int j, GZPattern& p, const KoganFace* face,
                 std::vector<GZPattern>& out) {
    int n = p.n();
    if (i == n) {
        out.push_back(p);
        return;
    }
    if (j == n - i) {
        pattern_rec(i + 1, 0, p, face, out);
        return;
    }
    long long lo = p.rows[i - 1][j];
    long long hi = p.rows[i - 1][j + 1];
    bool pinned = face && std::binary_search(face->equalities.begin(), face->equalities.end(),
                                             std::make_pair(i, j + 1));
    for (long long v = lo; v <= hi; ++v) {
        if (pinned && v != lo) break;
        p.rows[i].push_back(v);
        pattern_rec(i, j + 1, p, face, out);
        p.rows[i].pop_back();
    }
}

std::vector<GZPattern> enumerate_patterns(const Weight& lambda, const KoganFace* face) {
    require_weakly_increasing(lambda);
    int n = static_cast<int>(lambda.size());
    GZPattern p;
    p.rows.assign(n, {});
    p.rows[0] = std::vector<long long>(lambda.begin(), lambda.end());
    std::vector<GZPattern> out;
    if (n == 0) return out;
    pattern_rec(1, 0, p, face, out);
    return out;
}

}  // namespace

std::vector<GZPattern> gz_lattice_points(const Weight& lambda) {
    std::vector<GZPattern> points = enumerate_patterns(lambda, nullptr);
    if (BigInt(static_cast<long long>(points.size())) != weyl_dimension(lambda))
        throw std::logic_error("gz_lattice_points: count disagrees with the Weyl dimension");
    return points;
}

Weight projection_pi(const GZPattern& p) {
    if (!is_valid_pattern(p)) throw std::invalid_argument("projection_pi: invalid pattern");
    int n = p.n();
    auto row_sum = [&](int i) {
        long long s = 0;
        if (i < n)
            for (long long v : p.rows[i]) s += v;
        return s;
    };
    Weight weight(n);
    for (int k = 1; k <= n; ++k) weight[k - 1] = row_sum(n - k) - row_sum(n - k + 1);
    return weight;
}

ReducedWord kogan_face_word(const KoganFace& f) {
    // Bottom to top, left to right: larger row band first, then by column.
    std::vector<std::pair<int, int>> eqs = f.equalities;
    std::sort(eqs.begin(), eqs.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    ReducedWord word;
    for (const auto& [i, j] : eqs) word.push_back(i + j - 1);
    return word;
}

Permutation kogan_face_permutation(const KoganFace& f) {
    return Permutation::from_word(kogan_face_word(f), f.n);
}

bool kogan_face_reduced(const KoganFace& f) {
    return kogan_face_permutation(f).length() == static_cast<int>(f.equalities.size());
}

std::vector<KoganFace> enumerate_reduced_kogan_faces(const Permutation& w) {
    int n = w.degree();
    std::vector<std::pair<int, int>> positions;
    for (int i = 1; i < n; ++i)
        for (int j = 1; i + j <= n; ++j) positions.emplace_back(i, j);
    int target = w.length();
    std::vector<KoganFace> out;
    std::vector<std::pair<int, int>> chosen;
    // Subsets of size l(w); the word is reduced iff its product has length l(w).
    auto rec = [&](auto&& self, size_t idx, int remaining) -> void {
        if (remaining == 0) {
            KoganFace face(n, chosen);
            if (kogan_face_permutation(face) == w) out.push_back(std::move(face));
            return;
        }
        if (positions.size() - idx < static_cast<size_t>(remaining)) return;
        chosen.push_back(positions[idx]);
        self(self, idx + 1, remaining - 1);
        chosen.pop_back();
        self(self, idx + 1, remaining);
    };
    rec(rec, 0, target);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GZPattern> face_lattice_points(const KoganFace& f, const Weight& lambda) {
    if (static_cast<int>(lambda.size()) != f.n)
        throw std::invalid_argument("face_lattice_points: rank mismatch");
    return enumerate_patterns(lambda, &f);
}

Rat face_volume(const KoganFace& f, const Weight& lambda) {
    if (static_cast<int>(lambda.size()) != f.n)
        throw std::invalid_argument("face_volume: rank mismatch");
    require_weakly_increasing(lambda);
    int n = f.n;
    // Cells identified along equality chains collapse into classes; a class is
    // free unless its chain reaches row 0 (then it is the constant lambda_j).
    // Chains run within a column, so a free class is a vertical run of cells
    // whose top cell carries the binding interlacing constraints.
    std::map<std::pair<int, int>, int> class_of;  // free cell -> class id
    std::vector<std::pair<int, int>> top_cell;    // class id -> top cell
    auto pinned = [&](int i, int j) {
        return std::binary_search(f.equalities.begin(), f.equalities.end(), std::make_pair(i, j));
    };
    for (int i = 1; i < n; ++i) {
        for (int j = 1; i + j <= n; ++j) {
            if (pinned(i, j)) continue;
            class_of[{i, j}] = static_cast<int>(top_cell.size());
            top_cell.emplace_back(i, j);
        }
    }
    // Resolves cell (i, j) to a polynomial in the class variables (row 0
    // resolves to the constant lambda_j).
    int nclasses = static_cast<int>(top_cell.size());
    auto cell_value = [&](int i, int j) -> MultiPoly {
        while (i >= 1 && pinned(i, j)) --i;
        if (i == 0) return MultiPoly::constant(Rat(BigInt(lambda[j - 1])), nclasses);
        return MultiPoly::variable(class_of.at({i, j}) + 1, nclasses);
    };
    // Integrate deepest top rows first; bounds only involve shallower classes.
    std::vector<int> order(nclasses);
    for (int c = 0; c < nclasses; ++c) order[c] = c;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return top_cell[a].first > top_cell[b].first; });
    MultiPoly volume = MultiPoly::constant(Rat(1), nclasses);
    for (int c : order) {
        auto [i, j] = top_cell[c];
        volume = volume.definite_integral(c + 1, cell_value(i - 1, j), cell_value(i - 1, j + 1));
    }
    return volume.constant_value();
}

FormalCharacter demazure_character(const Permutation& w, const Weight& lambda) {
    require_strictly_increasing(lambda);
    if (static_cast<int>(lambda.size()) != w.degree())
        throw std::invalid_argument("demazure_character: rank mismatch");
    std::set<GZPattern> points;  // union over faces, deduplicated
    for (const KoganFace& f : enumerate_reduced_kogan_faces(w))
        for (const GZPattern& p : face_lattice_points(f, lambda)) points.insert(p);
    FormalCharacter ch;
    for (const GZPattern& p : points) {
        auto [it, inserted] = ch.emplace(projection_pi(p), BigInt(1));
        if (!inserted) it->second += BigInt(1);
    }
    return ch;
}

BigInt demazure_dimension(const Permutation& w, const Weight& lambda) {
    BigInt dim(0);
    for (const auto& [weight, mult] : demazure_character(w, lambda)) dim += mult;
    return dim;
}

MultiPoly gz_volume_polynomial(int n) {
    if (n < 1) throw std::domain_error("gz_volume_polynomial: need n >= 1");
    MultiPoly vol = MultiPoly::constant(Rat(1), n);
    for (int j = 1; j <= n; ++j)
        for (int i = j + 1; i <= n; ++i)
            vol *= MultiPoly::variable(i, n) - MultiPoly::variable(j, n);
    Rat constant(1);
    for (int k = 1; k < n; ++k) constant /= Rat(BigInt::factorial(k));
    return vol * constant;
}

BigInt kp_pairing(const Permutation& w, const Permutation& v, int n) {
    if (w.degree() != n || v.degree() != n) throw std::domain_error("kp_pairing: degree mismatch");
    int top = n * (n - 1) / 2;
    if (w.length() + v.length() != top)
        throw std::domain_error("kp_pairing: lengths must sum to n(n-1)/2");
    MultiPoly product = schubert_polynomial(w).poly * schubert_polynomial(v).poly;
    // Borel/Kaveh map x_i -> -d/d lambda_i turns the product into an element
    // of the differential-operator ring acting on the volume polynomial.
    MultiPoly op(n);
    MultiPoly padded_product = product.padded(n);
    for (const auto& [e, c] : padded_product.terms()) {
        int order = 0;
        for (int v_ : e) order += v_;
        op.add_term(e, order % 2 ? -c : c);
    }
    MultiPoly paired = apply_diff_operator(op, gz_volume_polynomial(n));
    BigInt value = paired.constant_value().as_integer();
    BigInt expected(v == compose(Permutation::longest(n), w) ? 1 : 0);
    if (value != expected)
        throw std::logic_error("kp_pairing: pairing disagrees with Poincare duality");
    return value;
}

BigInt flag_schubert_degree(const Permutation& w, const Weight& lambda) {
    require_strictly_increasing(lambda);
    if (static_cast<int>(lambda.size()) != w.degree())
        throw std::invalid_argument("flag_schubert_degree: rank mismatch");
    int n = w.degree();
    Rat total(0);
    for (const KoganFace& f : enumerate_reduced_kogan_faces(w)) total += face_volume(f, lambda);
    Rat degree = total * Rat(BigInt::factorial(n * (n - 1) / 2 - w.length()));
    return degree.as_integer();
}

}  // namespace schub
