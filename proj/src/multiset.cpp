#include "msip/multiset.hpp"

#include <algorithm>
#include <cassert>

namespace msip {

Rational Multiset::at(const IntVec& p) const {
    auto it = mult.find(p);
    return it == mult.end() ? Rational(0) : it->second;
}

void Multiset::add(const IntVec& p, const Rational& q) {
    if (q.is_zero()) return;
    auto it = mult.find(p);
    if (it == mult.end()) {
        if (q.sign() < 0) throw InputError("Multiset: negative multiplicity");
        mult.emplace(p, q);
        return;
    }
    it->second += q;
    if (it->second.sign() < 0) throw InputError("Multiset: negative multiplicity");
    if (it->second.is_zero()) mult.erase(it);
}

RatVec Multiset::sum(std::size_t dim) const {
    RatVec s(dim);
    for (const auto& [p, q] : mult) {
        if (p.size() != dim) throw InputError("Multiset: element dimension mismatch");
        for (std::size_t j = 0; j < dim; ++j) s[j] += q * Rational(p[j]);
    }
    return s;
}

Rational Multiset::cardinality() const {
    Rational c;
    for (const auto& [p, q] : mult) c += q;
    return c;
}

bool Multiset::integral() const {
    for (const auto& [p, q] : mult)
        if (!q.is_integer()) return false;
    return true;
}

namespace {

// Odometer over [lo_k..hi_k] per position, rightmost fastest; visits
// tuples in lexicographic order.
template <typename V, typename B>
bool advance(V& v, const B& lo, const B& hi) {
    std::size_t k = v.size();
    while (k > 0) {
        --k;
        if (v[k] < hi[k]) {
            ++v[k];
            for (std::size_t j = k + 1; j < v.size(); ++j) v[j] = lo[j];
            return true;
        }
    }
    return false;
}

std::size_t total_columns(const MultistageTree& tree) {
    std::size_t n = 0;
    for (const auto& node : tree.nodes) n += node.cols.size();
    return n;
}

}  // namespace

bool rho_valid(const MultistageTree& tree, const RatVec& b, const Rational& rho,
               const std::vector<Multiset>& T) {
    if (rho.sign() <= 0) throw InputError("rho_valid: rho must be positive");
    if (static_cast<int>(T.size()) != tree.dims.n)
        throw InputError("rho_valid: one multiset per leaf required");
    const std::size_t d = static_cast<std::size_t>(tree.dims.d[0]);

    for (int i = 1; i <= tree.dims.n; ++i) {
        RatVec sum = T[static_cast<std::size_t>(i - 1)].sum(d);
        RatVec proj = project(tree, i, b);
        Rational dev;
        for (std::size_t j = 0; j < d; ++j) {
            Rational a = (sum[j] - proj[j]).abs();
            if (a > dev) dev = a;
        }
        if (!(dev < rho)) return false;
    }
    return true;
}

std::vector<Multiset> valid_witness_from_kernel(const Program& P, const MultistageTree& tree,
                                                const IntVec& y, const GraverOptions& opts) {
    if (y.size() != P.A.entries.cols)
        throw InputError("valid_witness_from_kernel: dimension mismatch");
    if (!is_zero(mat_vec(P.A.entries, y)))
        throw InputError("valid_witness_from_kernel: y is not in the kernel");

    std::vector<Multiset> witness;
    for (int i = 1; i <= tree.dims.n; ++i) {
        Subprogram sub = leaf_subprogram(P, tree, i);
        GraverBasis G = graver_basis(sub.A, opts);
        ConformalDecomposition dec = conformal_decompose(G, project(tree, i, y));
        Multiset g;
        for (const auto& [elem, count] : dec.parts) g.add(elem, Rational(count));
        witness.push_back(std::move(g));
    }
    return witness;
}

namespace {

struct LeafSupport {
    std::vector<IntVec> points;      // sorted support of T_i
    std::vector<long long> maxMult;  // multiplicity per point
};

// One enumerated submultiset of a leaf.
struct Choice {
    std::vector<long long> take;  // per support point
    long long card = 0;
    IntVec sum;  // d-dimensional element sum
};

std::vector<Choice> enumerate_choices(const LeafSupport& lc, std::size_t d, long max_card) {
    std::vector<Choice> out;
    std::vector<long long> take(lc.points.size(), 0);
    std::vector<long long> lo(lc.points.size(), 0);
    do {
        long long card = 0;
        for (long long t : take) card += t;
        if (card > max_card) continue;
        Choice ch;
        ch.take = take;
        ch.card = card;
        ch.sum.assign(d, Int(0));
        for (std::size_t k = 0; k < lc.points.size(); ++k)
            for (std::size_t j = 0; j < d; ++j) ch.sum[j] += Int(take[k]) * lc.points[k][j];
        out.push_back(std::move(ch));
    } while (advance(take, lo, lc.maxMult));
    return out;
}

}  // namespace

std::optional<SubmultisetWitness> find_small_valid_submultisets(const MultistageTree& tree,
                                                                const std::vector<Multiset>& T,
                                                                const Int& delta, long max_card,
                                                                std::uint64_t budget) {
    const int n = tree.dims.n;
    const int t = tree.dims.t;
    const std::size_t d = static_cast<std::size_t>(tree.dims.d[0]);
    if (static_cast<int>(T.size()) != n)
        throw InputError("find_small_valid_submultisets: one multiset per leaf required");

    std::vector<LeafSupport> leaves(static_cast<std::size_t>(n));
    Int combinations = 1;
    for (int i = 0; i < n; ++i) {
        const Multiset& Ti = T[static_cast<std::size_t>(i)];
        if (!Ti.integral())
            throw InputError("find_small_valid_submultisets: multiplicities must be integral");
        LeafSupport lc;
        for (const auto& [p, q] : Ti.mult) {
            if (p.size() != d)
                throw InputError("find_small_valid_submultisets: element dimension mismatch");
            if (inf_norm(p) > delta)
                throw InputError("find_small_valid_submultisets: element exceeds delta");
            if (q.num() > Int(1'000'000))
                throw BudgetError("find_small_valid_submultisets: multiplicity too large");
            lc.points.push_back(p);
            lc.maxMult.push_back(q.num().convert_to<long long>());
            combinations *= Int(lc.maxMult.back() + 1);
        }
        for (std::size_t a = 0; a < lc.points.size(); ++a)
            for (std::size_t b2 = a + 1; b2 < lc.points.size(); ++b2)
                if (!sign_compatible(lc.points[a], lc.points[b2]))
                    throw InputError(
                        "find_small_valid_submultisets: sign-incompatible elements in T_" +
                        std::to_string(i + 1));
        leaves[static_cast<std::size_t>(i)] = std::move(lc);
    }
    if (combinations > Int(budget))
        throw BudgetError("find_small_valid_submultisets: search space exceeds budget");

    // Stage offsets inside a path vector: depth j occupies
    // [offset[j], offset[j] + s_j).
    std::vector<std::size_t> offset(static_cast<std::size_t>(t) + 1, 0);
    for (int j = 1; j <= t; ++j)
        offset[static_cast<std::size_t>(j)] =
            offset[static_cast<std::size_t>(j - 1)] +
            static_cast<std::size_t>(tree.dims.s[static_cast<std::size_t>(j - 1)]);

    // Ancestor node of each leaf per depth.
    std::vector<std::vector<int>> anc(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(t) + 1));
    for (int i = 0; i < n; ++i) {
        int v = tree.leaves[static_cast<std::size_t>(i)];
        for (int j = t; j >= 0; --j) {
            anc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            v = tree.nodes[static_cast<std::size_t>(v)].parent;
        }
    }

    std::vector<std::vector<Choice>> choices;
    for (int i = 0; i < n; ++i)
        choices.push_back(enumerate_choices(leaves[static_cast<std::size_t>(i)], d, max_card));

    // Segment values fixed so far, per tree node.
    std::vector<std::optional<IntVec>> seg(tree.nodes.size());
    std::vector<const Choice*> picked(static_cast<std::size_t>(n), nullptr);

    std::optional<SubmultisetWitness> best;
    long long best_max = 0, best_total = 0;

    auto record = [&]() {
        long long worst = 0, total = 0;
        bool all_empty = true;
        for (const Choice* ch : picked) {
            worst = std::max(worst, ch->card);
            total += ch->card;
            if (ch->card > 0) all_empty = false;
        }
        if (all_empty) return;
        if (best && (worst > best_max || (worst == best_max && total >= best_total))) return;

        SubmultisetWitness w;
        for (int i = 0; i < n; ++i) {
            Multiset s;
            const auto& lc = leaves[static_cast<std::size_t>(i)];
            const auto& take = picked[static_cast<std::size_t>(i)]->take;
            for (std::size_t k = 0; k < lc.points.size(); ++k)
                if (take[k] > 0) s.add(lc.points[k], Rational(take[k]));
            w.S.push_back(std::move(s));
        }
        w.bhat.assign(total_columns(tree), Int(0));
        for (std::size_t v = 0; v < tree.nodes.size(); ++v) {
            const auto& cols = tree.nodes[v].cols;
            const IntVec& sv = *seg[v];
            for (std::size_t k = 0; k < cols.size(); ++k)
                w.bhat[static_cast<std::size_t>(cols[k])] = sv[k];
        }
        best = std::move(w);
        best_max = worst;
        best_total = total;
    };

    // DFS over leaves; per-leaf choices are visited in lexicographic
    // multiplicity order, so the first witness with a given (max, total)
    // key is the lexicographically smallest one.
    auto dfs = [&](auto&& self, int i) -> void {
        if (i == n) {
            record();
            return;
        }
        for (const Choice& ch : choices[static_cast<std::size_t>(i)]) {
            std::vector<int> placed;
            bool ok = true;
            for (int j = 0; j <= t && ok; ++j) {
                int v = anc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                std::size_t off = offset[static_cast<std::size_t>(j)];
                std::size_t sj = static_cast<std::size_t>(tree.dims.s[static_cast<std::size_t>(j)]);
                IntVec piece(ch.sum.begin() + static_cast<std::ptrdiff_t>(off),
                             ch.sum.begin() + static_cast<std::ptrdiff_t>(off + sj));
                if (seg[static_cast<std::size_t>(v)]) {
                    if (*seg[static_cast<std::size_t>(v)] != piece) ok = false;
                } else {
                    seg[static_cast<std::size_t>(v)] = std::move(piece);
                    placed.push_back(v);
                }
            }
            if (ok) {
                picked[static_cast<std::size_t>(i)] = &ch;
                self(self, i + 1);
                picked[static_cast<std::size_t>(i)] = nullptr;
            }
            for (int v : placed) seg[static_cast<std::size_t>(v)].reset();
        }
    };
    dfs(dfs, 0);
    return best;
}

std::optional<SingleElementResult> single_element(const std::vector<Multiset>& lambdas,
                                                  const RatVec& b, const Rational& rho,
                                                  const Int& delta, std::uint64_t budget) {
    const std::size_t d = b.size();
    const std::size_t m = lambdas.size();
    if (m == 0) throw InputError("single_element: no multisets given");
    if (d == 0) throw InputError("single_element: zero-dimensional target");
    if (rho.sign() <= 0) throw InputError("single_element: rho must be positive");
    if (delta < 0) throw InputError("single_element: negative delta");

    for (const auto& lam : lambdas) {
        for (const auto& [p, q] : lam.mult) {
            if (p.size() != d) throw InputError("single_element: element dimension mismatch");
            if (inf_norm(p) > delta)
                throw InputError("single_element: support outside the delta box");
        }
        RatVec s = lam.sum(d);
        Rational dev;
        for (std::size_t j = 0; j < d; ++j) {
            Rational a = (s[j] - b[j]).abs();
            if (a > dev) dev = a;
        }
        if (!(dev < rho))
            throw InputError("single_element: multiset sum deviates from b by at least rho");
    }

    const Int bhat_max = int_pow(Int(d) * delta, Int(d) * Int(d));
    if (bhat_max == 0) return std::nullopt;

    // The full point box, sorted lexicographically; basis columns come
    // from its d-subsets.
    Int box_count = int_pow(2 * delta + 1, Int(d));
    if (box_count > Int(100'000)) throw BudgetError("single_element: point box too large");
    std::vector<IntVec> points;
    {
        IntVec lo(d, -delta), hi(d, delta), p = lo;
        do {
            points.push_back(p);
        } while (advance(p, lo, hi));
    }

    Int sweep_cost = int_pow(2 * bhat_max + 1, Int(d)) * Int(points.size());
    if (sweep_cost > Int(budget)) throw BudgetError("single_element: search space exceeds budget");

    auto try_basis_for = [&](const Multiset& lam, const RatVec& bhat_r, IntMatrix& basis_out,
                             RatVec& x_out) -> bool {
        if (points.size() < d) return false;
        // first d-subset (lexicographic index combinations) that is
        // invertible and fits under lambda
        std::vector<std::size_t> comb(d);
        for (std::size_t k = 0; k < d; ++k) comb[k] = k;
        while (true) {
            RatMatrix B(d, d);
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t r = 0; r < d; ++r) B.at(r, c) = Rational(points[comb[c]][r]);
            if (auto x = solve_square(B, bhat_r)) {
                bool fits = true;
                for (std::size_t c = 0; c < d && fits; ++c) {
                    if ((*x)[c].sign() < 0) fits = false;
                    else if ((*x)[c] > lam.at(points[comb[c]])) fits = false;
                }
                if (fits) {
                    IntMatrix Bi(d, d);
                    for (std::size_t c = 0; c < d; ++c)
                        for (std::size_t r = 0; r < d; ++r) Bi.at(r, c) = points[comb[c]][r];
                    basis_out = std::move(Bi);
                    x_out = std::move(*x);
                    return true;
                }
            }
            // next index combination
            std::size_t k = d;
            bool moved = false;
            while (k > 0) {
                --k;
                if (comb[k] < points.size() - d + k) {
                    ++comb[k];
                    for (std::size_t j = k + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
                    moved = true;
                    break;
                }
            }
            if (!moved) return false;
        }
    };

    // Candidates by increasing max-norm shell, lexicographic inside.
    for (Int shell = 1; shell <= bhat_max; ++shell) {
        IntVec lo(d, -shell), hi(d, shell), cand = lo;
        do {
            if (inf_norm(cand) != shell) continue;
            RatVec cand_r = to_rational(cand);
            SingleElementResult res;
            res.bhat = cand;
            bool all = true;
            for (std::size_t i = 0; i < m && all; ++i) {
                IntMatrix basis;
                RatVec x;
                if (try_basis_for(lambdas[i], cand_r, basis, x)) {
                    res.bases.push_back(std::move(basis));
                    res.x.push_back(std::move(x));
                } else {
                    all = false;
                }
            }
            if (all) return res;
        } while (advance(cand, lo, hi));
    }
    return std::nullopt;
}

AlmostPartition almost_partition(const std::vector<Multiset>& lambdas, const RatVec& b,
                                 const Rational& rho, const Int& delta, std::uint64_t budget) {
    std::vector<Multiset> work = lambdas;
    RatVec rem = b;
    const std::size_t d = b.size();
    const std::size_t m = lambdas.size();

    AlmostPartition out;
    std::map<std::pair<std::size_t, std::vector<Int>>, Multiset> family;

    std::uint64_t guard = 0;
    while (true) {
        if (++guard > 1'000'000)
            throw BudgetError("almost_partition: iteration guard exceeded");
        auto res = single_element(work, rem, rho, delta, budget);
        if (!res) break;

        for (std::size_t i = 0; i < m; ++i) {
            const IntMatrix& B = res->bases[i];
            for (std::size_t c = 0; c < d; ++c) {
                IntVec col(d);
                for (std::size_t r = 0; r < d; ++r) col[r] = B.at(r, c);
                work[i].add(col, -res->x[i][c]);
            }
            family[{i, B.a}].add(res->bhat, Rational(1));
        }
        for (std::size_t j = 0; j < d; ++j) rem[j] -= Rational(res->bhat[j]);
        if (!out.extracted.empty() && out.extracted.back().first == res->bhat)
            out.extracted.back().second += 1;
        else
            out.extracted.emplace_back(res->bhat, Int(1));
    }

    for (auto& [key, lam] : family) {
        AlmostPartition::Entry e;
        e.index = key.first;
        e.basis = IntMatrix(d, d);
        e.basis.a = key.second;
        e.lam = lam;
        if (e.index == 0)
            for (const auto& [p, q] : lam.mult) out.lambda_total.add(p, q);
        out.family.push_back(std::move(e));
    }
    out.residual = std::move(rem);
    return out;
}

}  // namespace msip
