#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "genwt/codes.hpp"
#include "genwt/families.hpp"

namespace genwt {

/// One weight hierarchy τ_1..τ_k. Values are ambient dimensions except for
/// GSR weights (see gsr_weights). `normalization` is a display divisor (m for
/// the rank-metric hierarchies); stored values are never pre-divided.
/// `complete` is false when a budget cutoff truncated the computation, in
/// which case `note` carries the bracket for the missing entries and
/// `witnesses` only covers the computed prefix.
struct WeightHierarchy {
    std::string code_id;
    std::string family;
    int step = 1;
    int normalization = 1;
    std::vector<int> values;
    std::vector<Subspace> witnesses;
    bool complete = true;
    std::string note;
};

/// τ_r(C) = min dim of a family member meeting C in dimension >= r, for
/// r = 1..k. Single sweep over member dimensions ascending: every member of
/// dimension d with dim(T ∩ C) >= r settles all still-open ranks up to that
/// intersection, so each rank's witness is the first member reaching it in
/// the family's deterministic stream.
inline WeightHierarchy t_weights(const LinearCode& C, const TestFamily& T) {
    if (C.k() == 0) throw std::invalid_argument("t_weights: zero code");
    if (!(C.space == T.space()) || C.field() != T.field())
        throw std::invalid_argument("t_weights: code and family live in different spaces");
    const int k = C.k(), nu = C.nu(), ell = T.step();
    WeightHierarchy H;
    H.family = T.name();
    H.step = ell;
    H.values.assign(k, 0);
    std::vector<std::optional<Subspace>> wit(k);
    int found = 0;
    for (int d = ell; d <= nu && found < k; d += ell) {
        T.members_of_dim(d, [&](const LinearCode& M) {
            int g = dim_intersection(M.sub, C.sub);
            if (g > found) {
                for (int r = found + 1; r <= std::min(g, k); ++r) {
                    H.values[r - 1] = d;
                    wit[r - 1] = M.sub;
                }
                found = std::min(g, k);
            }
            return found < k;
        });
    }
    if (found < k)
        throw std::runtime_error("t_weights: family exhausted below rank " +
                                 std::to_string(found + 1));
    for (int r = 0; r < k; ++r) H.witnesses.push_back(*wit[r]);
    return H;
}

/// Generalized Hamming weights via subcode supports: gh_r = min |supp(D)|
/// over r-dim subcodes, witness A_supp(D). This equals the SOA hierarchy;
/// `check_against_family` recomputes the slow way and throws on divergence.
inline WeightHierarchy gh_weights(const LinearCode& C, bool check_against_family = false) {
    if (C.space.kind() != Metric::hamming)
        throw std::invalid_argument("gh_weights: Hamming space required");
    if (C.k() == 0) throw std::invalid_argument("gh_weights: zero code");
    const GF& F = C.field();
    const int k = C.k(), nu = C.nu();
    WeightHierarchy H;
    H.family = "soa";
    H.step = 1;
    int prev = 0;
    for (int r = 1; r <= k; ++r) {
        const int lo = std::max(r, prev);
        int best = nu + 1;
        std::optional<std::set<int>> best_supp;
        subcodes(C, r, [&](const LinearCode& D) {
            std::set<int> s = hamming_support(D);
            if (static_cast<int>(s.size()) < best) {
                best = static_cast<int>(s.size());
                best_supp = std::move(s);
            }
            return best > lo;
        });
        Mat b(F, best, nu);
        int i = 0;
        for (int c : *best_supp) b.at(i++, c) = 1;
        H.values.push_back(best);
        H.witnesses.push_back(Subspace{std::move(b)});
        prev = best;
    }
    if (check_against_family) {
        WeightHierarchy slow = t_weights(C, HammingSOAFamily(C.space, F));
        if (slow.values != H.values)
            throw std::logic_error("gh_weights: support scan disagrees with the family sweep");
    }
    return H;
}

struct RankWeightHierarchies {
    WeightHierarchy gd;  // against rank OAs
    WeightHierarchy gm;  // against rank-support spaces
};

/// Both rank-metric hierarchies, values in ambient dimensions with the
/// display normalization m. GD <= GM entrywise always; they coincide for
/// n < m, where every OA is a support space.
inline RankWeightHierarchies gd_gm_weights(const LinearCode& C) {
    if (C.space.kind() != Metric::rank)
        throw std::invalid_argument("gd_gm_weights: rank space required");
    RankWeightHierarchies R;
    R.gd = t_weights(C, RankOAFamily(C.space, C.field()));
    R.gm = t_weights(C, RankSupportFamily(C.space, C.field()));
    R.gd.normalization = C.space.m();
    R.gm.normalization = C.space.m();
    return R;
}

/// Generalized sum-rank weights. The minimized objective is
/// Σ_blocks rank-budget + tail support size, i.e. Σ dim(A_i)/m_i over the
/// factors of a sum-rank SOA A with dim(A ∩ C) >= r. This is an integer but
/// not a dimension, and for unequal m_i the objective order differs from the
/// dimension order, so members are streamed grouped by objective value.
inline WeightHierarchy gsr_weights(const LinearCode& C) {
    if (C.space.kind() != Metric::sumrank)
        throw std::invalid_argument("gsr_weights: sum-rank space required");
    if (C.k() == 0) throw std::invalid_argument("gsr_weights: zero code");
    const GF& F = C.field();
    const Space& S = C.space;
    const int k = C.k();

    struct Factor {
        std::shared_ptr<const TestFamily> fam;
        std::vector<int> coords;
        std::vector<int> dim_of_obj;  // member dimension per unit of objective
        std::vector<std::optional<std::vector<LinearCode>>> cache;
    };
    std::vector<Factor> factors;
    for (std::size_t b = 0; b < S.matrix_blocks().size(); ++b) {
        auto [n, m] = S.matrix_blocks()[b];
        Factor f;
        f.fam = std::make_shared<RankOAFamily>(Space::rank(n, m), F);
        f.coords = detail::block_coords(S, static_cast<int>(b));
        for (int r = 0; r <= n; ++r) f.dim_of_obj.push_back(r * m);
        f.cache.resize(f.dim_of_obj.size());
        factors.push_back(std::move(f));
    }
    if (S.tail() > 0) {
        Factor f;
        f.fam = std::make_shared<HammingSOAFamily>(Space::hamming(S.tail()), F);
        f.coords = detail::tail_coords(S);
        for (int d = 0; d <= S.tail(); ++d) f.dim_of_obj.push_back(d);
        f.cache.resize(f.dim_of_obj.size());
        factors.push_back(std::move(f));
    }
    const std::size_t nf = factors.size();
    std::vector<int> cap_suffix(nf + 1, 0);
    for (int f = static_cast<int>(nf) - 1; f >= 0; --f)
        cap_suffix[f] = cap_suffix[f + 1] + static_cast<int>(factors[f].dim_of_obj.size()) - 1;

    WeightHierarchy H;
    H.family = "gsr";
    H.step = 1;
    H.note = "values are weighted objectives (block ranks plus tail support), not dimensions";
    H.values.assign(k, 0);
    std::vector<std::optional<Subspace>> wit(k);
    int found = 0;

    std::vector<const std::vector<LinearCode>*> lists(nf);
    std::vector<const std::vector<int>*> maps(nf);
    for (std::size_t f = 0; f < nf; ++f) maps[f] = &factors[f].coords;
    auto members_at = [&](std::size_t f, int o) -> const std::vector<LinearCode>& {
        auto& slot = factors[f].cache[o];
        if (!slot) slot = factors[f].fam->collect_members(factors[f].dim_of_obj[o]);
        return *slot;
    };
    std::vector<const LinearCode*> parts(nf);
    auto emit = [&](int o) -> bool {
        for (std::size_t f = 0; f < nf; ++f)
            if (lists[f]->empty()) return true;
        std::vector<std::size_t> idx(nf, 0);
        while (true) {
            for (std::size_t f = 0; f < nf; ++f) parts[f] = &(*lists[f])[idx[f]];
            budget_charge();
            LinearCode A = detail::embed_direct_sum(S, F, parts, maps);
            int g = dim_intersection(A.sub, C.sub);
            if (g > found) {
                for (int r = found + 1; r <= std::min(g, k); ++r) {
                    H.values[r - 1] = o;
                    wit[r - 1] = A.sub;
                }
                found = std::min(g, k);
                if (found == k) return false;
            }
            std::size_t f = nf;
            while (f > 0) {
                --f;
                if (++idx[f] < lists[f]->size()) break;
                idx[f] = 0;
                if (f == 0) return true;
            }
        }
    };
    std::function<bool(std::size_t, int, int)> rec = [&](std::size_t f, int rem, int o) -> bool {
        if (f == nf) return rem != 0 ? true : emit(o);
        const int cap = static_cast<int>(factors[f].dim_of_obj.size()) - 1;
        for (int u = 0; u <= std::min(cap, rem); ++u) {
            if (rem - u > cap_suffix[f + 1]) continue;
            lists[f] = &members_at(f, u);
            if (!rec(f + 1, rem - u, o)) return false;
        }
        return true;
    };
    for (int o = 1; o <= cap_suffix[0] && found < k; ++o) rec(0, o, o);
    if (found < k)
        throw std::runtime_error("gsr_weights: objective range exhausted below rank " +
                                 std::to_string(found + 1));
    for (int r = 0; r < k; ++r) H.witnesses.push_back(*wit[r]);
    return H;
}

namespace detail {

/// Shared GMDS/GMRD engine: μ_r = min over r-dim subcodes D of the least
/// dimension (multiple of `step`) of a supercode of D passing `is_extremal`.
/// Candidate dimensions are scanned level by level across all subcodes, so
/// the first hit is the minimum and no subcode climbs a supercode ladder past
/// it. Levels start at max(⌈r/step⌉·step, μ_{r-1}) since the hierarchy is
/// monotone. A budget cutoff returns the computed prefix with a bracket note
/// instead of throwing.
template <typename ExtremalPred>
WeightHierarchy cover_weights(const LinearCode& C, int step, const ExtremalPred& is_extremal,
                              const std::string& label) {
    if (C.k() == 0) throw std::invalid_argument(label + " weights: zero code");
    const int k = C.k(), nu = C.nu();
    WeightHierarchy H;
    H.family = label;
    H.step = step;
    auto round_up = [step](int x) { return (x + step - 1) / step * step; };
    int prev = 0;
    try {
        for (int r = 1; r <= k; ++r) {
            const int lo = std::max(round_up(r), prev);
            int best = -1;
            std::optional<Subspace> best_w;
            // The full space is extremal in both metrics, so every level
            // sweep terminates by j = nu.
            for (int j = lo; j <= nu && best < 0; j += step) {
                subcodes(C, r, [&](const LinearCode& D) {
                    supercodes(D, j, [&](const LinearCode& M) {
                        if (!is_extremal(M)) return true;
                        best = j;
                        best_w = M.sub;
                        return false;
                    });
                    return best < 0;
                });
            }
            H.values.push_back(best);
            H.witnesses.push_back(*best_w);
            prev = best;
        }
    } catch (const BudgetExceeded&) {
        const int r = static_cast<int>(H.values.size()) + 1;
        const int lo = std::max(round_up(r), prev);
        H.complete = false;
        H.note = "budget exceeded at rank " + std::to_string(r) + "; remaining weights lie in [" +
                 std::to_string(lo) + ", " + std::to_string(round_up(nu - k + r)) + "]";
    }
    return H;
}

}  // namespace detail

/// Generalized MDS weights by ascending supercode search over subcodes.
inline WeightHierarchy gmds_weights(const LinearCode& C) {
    if (C.space.kind() != Metric::hamming)
        throw std::invalid_argument("gmds_weights: Hamming space required");
    return detail::cover_weights(
        C, 1, [](const LinearCode& M) { return is_mds(M); }, "mds");
}

/// Generalized MRD weights; candidate dimensions are multiples of m.
inline WeightHierarchy gmrd_weights(const LinearCode& C) {
    if (C.space.kind() != Metric::rank)
        throw std::invalid_argument("gmrd_weights: rank space required");
    return detail::cover_weights(
        C, C.space.m(), [](const LinearCode& M) { return is_mrd(M); }, "mrd");
}

/// α_i = max of min_distance over all i-dim subcodes. Works in any metric;
/// not monotone in general.
struct SubcodeDistanceProfile {
    std::vector<int> values;
    std::vector<Subspace> witnesses;
};

inline SubcodeDistanceProfile subcode_distances(const LinearCode& C) {
    if (C.k() == 0) throw std::invalid_argument("subcode_distances: zero code");
    SubcodeDistanceProfile P;
    for (int i = 1; i <= C.k(); ++i) {
        int best = -1;
        std::optional<Subspace> w;
        subcodes(C, i, [&](const LinearCode& D) {
            int d = min_distance(D);
            if (d > best) {
                best = d;
                w = D.sub;
            }
            return true;
        });
        P.values.push_back(best);
        P.witnesses.push_back(*w);
    }
    return P;
}

/// One residue class of the duality identity: the dual hierarchy values at
/// ranks s ≡ h (mod ℓ) against the complement of the shifted primal values
/// inside the multiples of ℓ up to ν.
struct ResidueCheck {
    int h = 0;
    std::vector<int> dual_values;
    std::vector<int> complement;
    bool ok = false;
};

struct DualityReport {
    WeightHierarchy primal;
    WeightHierarchy dual_hierarchy;
    std::vector<ResidueCheck> residues;
    bool sets_ok = true;
    bool inequalities_ok = true;

    [[nodiscard]] bool ok() const { return sets_ok && inequalities_ok; }
};

/// Checks, for every residue h in [0, ℓ):
///   {τ_s(C^⊥) : s ≡ h}  =  {multiples of ℓ in [1, ν]} \ {ν+ℓ-τ_r(C) : r ≡ k+h}
/// plus the two index-shift inequalities
///   τ_{k^⊥+r-τ_r(C)}(C^⊥) <= ν-τ_r(C) and its dual, with τ at index <= 0
/// read as 0. The zero code on either side contributes an empty hierarchy.
inline DualityReport verify_duality(const LinearCode& C, const TestFamily& T) {
    const int nu = C.nu(), k = C.k(), kperp = nu - k, ell = T.step();
    DualityReport rep;
    rep.primal.family = T.name();
    rep.primal.step = ell;
    rep.dual_hierarchy.family = T.name();
    rep.dual_hierarchy.step = ell;
    if (k > 0) rep.primal = t_weights(C, T);
    if (kperp > 0) rep.dual_hierarchy = t_weights(dual(C), T);
    const std::vector<int>& tau = rep.primal.values;
    const std::vector<int>& taud = rep.dual_hierarchy.values;

    for (int h = 0; h < ell; ++h) {
        ResidueCheck rc;
        rc.h = h;
        std::set<int> lhs, rhs;
        for (int s = 1; s <= kperp; ++s)
            if (s % ell == h) lhs.insert(taud[s - 1]);
        for (int v = ell; v <= nu; v += ell) rhs.insert(v);
        for (int r = 1; r <= k; ++r)
            if (((r - k - h) % ell + ell) % ell == 0) rhs.erase(nu + ell - tau[r - 1]);
        rc.dual_values.assign(lhs.begin(), lhs.end());
        rc.complement.assign(rhs.begin(), rhs.end());
        rc.ok = lhs == rhs;
        if (!rc.ok) rep.sets_ok = false;
        rep.residues.push_back(std::move(rc));
    }

    auto tau_at = [](const std::vector<int>& v, int idx) { return idx <= 0 ? 0 : v[idx - 1]; };
    for (int r = 1; r <= k; ++r)
        if (tau_at(taud, kperp + r - tau[r - 1]) > nu - tau[r - 1]) rep.inequalities_ok = false;
    for (int s = 1; s <= kperp; ++s)
        if (tau_at(tau, k + s - taud[s - 1]) > nu - taud[s - 1]) rep.inequalities_ok = false;
    return rep;
}

/// Reconstructs τ(C^⊥) from τ(C) alone: per residue h, remove the shifted
/// primal values from the multiples of ℓ and pour what is left, ascending,
/// into the dual ranks s ≡ h. Throws invalid_argument whenever the input
/// could not be the hierarchy of a code (bad bounds, collisions, counts).
inline std::vector<int> predict_dual_hierarchy(const std::vector<int>& tau, int k, int nu,
                                               int ell) {
    if (ell < 1 || nu < 1 || nu % ell != 0 || k < 0 || k > nu)
        throw std::invalid_argument("predict_dual_hierarchy: bad parameters");
    if (static_cast<int>(tau.size()) != k)
        throw std::invalid_argument("predict_dual_hierarchy: need exactly k values");
    for (int r = 1; r <= k; ++r) {
        int v = tau[r - 1];
        if (v % ell != 0 || v < (r + ell - 1) / ell * ell || v > (nu - k + r + ell - 1) / ell * ell)
            throw std::invalid_argument("inconsistent input hierarchy: value out of bounds");
        if (r > 1 && v < tau[r - 2])
            throw std::invalid_argument("inconsistent input hierarchy: not weakly increasing");
    }
    const int kperp = nu - k;
    std::vector<int> out(kperp, 0);
    for (int h = 0; h < ell; ++h) {
        std::set<int> avail;
        for (int v = ell; v <= nu; v += ell) avail.insert(v);
        for (int r = 1; r <= k; ++r) {
            if (((r - k - h) % ell + ell) % ell != 0) continue;
            if (avail.erase(nu + ell - tau[r - 1]) == 0)
                throw std::invalid_argument("inconsistent input hierarchy: repeated value "
                                            "within a residue class");
        }
        std::vector<int> slots;
        for (int s = 1; s <= kperp; ++s)
            if (s % ell == h) slots.push_back(s);
        if (slots.size() != avail.size())
            throw std::invalid_argument("inconsistent input hierarchy: slot count mismatch");
        auto it = avail.begin();
        for (int s : slots) out[s - 1] = *it++;
    }
    return out;
}

enum class CoverVariant { gmds, gmrd };

/// μ(C) and μ(C^⊥) never share the sum ν+step: all rank pairs for GMDS, only
/// residue-matched pairs (r ≡ t-k mod m) for GMRD. Also re-checks the two
/// index-shift inequalities on the μ hierarchies. Incomplete hierarchies are
/// compared on their computed prefixes.
struct DisjointnessReport {
    WeightHierarchy primal;
    WeightHierarchy dual_hierarchy;
    std::vector<std::array<int, 2>> colliding_pairs;  // (t, r) with μ_t + μ_r^⊥ = ν+step
    bool disjoint_ok = true;
    bool inequalities_ok = true;
    bool complete = true;

    [[nodiscard]] bool ok() const { return disjoint_ok && inequalities_ok; }
};

inline DisjointnessReport check_disjointness(const LinearCode& C, CoverVariant variant) {
    const int nu = C.nu(), k = C.k();
    if (k == 0 || k == nu)
        throw std::invalid_argument("check_disjointness: need both code and dual nonzero");
    DisjointnessReport rep;
    const int step = variant == CoverVariant::gmds ? 1 : C.space.m();
    LinearCode Cd = dual(C);
    if (variant == CoverVariant::gmds) {
        rep.primal = gmds_weights(C);
        rep.dual_hierarchy = gmds_weights(Cd);
    } else {
        rep.primal = gmrd_weights(C);
        rep.dual_hierarchy = gmrd_weights(Cd);
    }
    rep.complete = rep.primal.complete && rep.dual_hierarchy.complete;
    const std::vector<int>& mu = rep.primal.values;
    const std::vector<int>& mud = rep.dual_hierarchy.values;
    const int tmax = static_cast<int>(mu.size()), rmax = static_cast<int>(mud.size());

    for (int t = 1; t <= tmax; ++t)
        for (int r = 1; r <= rmax; ++r) {
            if (variant == CoverVariant::gmrd && ((r - t + k) % step + step) % step != 0) continue;
            if (mu[t - 1] + mud[r - 1] == nu + step) {
                rep.disjoint_ok = false;
                rep.colliding_pairs.push_back({t, r});
            }
        }
    auto mu_at = [](const std::vector<int>& v, int idx) { return idx <= 0 ? 0 : v[idx - 1]; };
    for (int r = 1; r <= tmax; ++r) {
        int idx = (nu - k) + r - mu[r - 1];
        if (idx <= rmax && mu_at(mud, idx) > nu - mu[r - 1]) rep.inequalities_ok = false;
    }
    for (int s = 1; s <= rmax; ++s) {
        int idx = k + s - mud[s - 1];
        if (idx <= tmax && mu_at(mu, idx) > nu - mud[s - 1]) rep.inequalities_ok = false;
    }
    return rep;
}

/// Memoized per-dimension member lists recovered from a family's membership
/// predicate alone, by filtering every subspace of the ambient space. Keyed
/// by family name, space, field and dimension. Not thread safe.
class OracleCache {
  public:
    const std::vector<Subspace>& members(const TestFamily& T, int d) {
        std::string key = T.name() + "|" + T.space().to_string() + "|q" +
                          std::to_string(T.field().q()) + "|d" + std::to_string(d);
        auto it = map_.find(key);
        if (it != map_.end()) return it->second;
        std::vector<Subspace> v;
        enumerate_subspaces(T.space().nu(), d, T.field(), [&](const Subspace& S) {
            if (T.is_member(make_code(T.space(), S))) v.push_back(S);
            return true;
        });
        return map_.emplace(std::move(key), std::move(v)).first->second;
    }

  private:
    std::map<std::string, std::vector<Subspace>> map_;
};

/// Implementation-independent recomputation of t_weights: scans every
/// subspace of each dimension and keeps those the family's predicate accepts,
/// never touching the member generator. Witnesses may differ from t_weights
/// (scan order differs); values must not.
inline WeightHierarchy oracle_t_weights(const LinearCode& C, const TestFamily& T,
                                        OracleCache* cache = nullptr) {
    if (C.k() == 0) throw std::invalid_argument("oracle_t_weights: zero code");
    if (!(C.space == T.space()) || C.field() != T.field())
        throw std::invalid_argument("oracle_t_weights: code and family live in different spaces");
    const int k = C.k(), nu = C.nu(), ell = T.step();
    WeightHierarchy H;
    H.family = T.name();
    H.step = ell;
    H.note = "oracle";
    H.values.assign(k, 0);
    std::vector<std::optional<Subspace>> wit(k);
    int found = 0;
    auto absorb = [&](const Subspace& S) {
        int g = dim_intersection(S, C.sub);
        if (g > found) {
            for (int r = found + 1; r <= std::min(g, k); ++r) {
                H.values[r - 1] = S.dim();
                wit[r - 1] = S;
            }
            found = std::min(g, k);
        }
        return found < k;
    };
    for (int d = ell; d <= nu && found < k; d += ell) {
        if (cache != nullptr) {
            for (const Subspace& S : cache->members(T, d))
                if (!absorb(S)) break;
        } else {
            enumerate_subspaces(nu, d, C.field(), [&](const Subspace& S) {
                if (!T.is_member(make_code(T.space(), S))) return true;
                return absorb(S);
            });
        }
    }
    if (found < k)
        throw std::runtime_error("oracle_t_weights: family exhausted below rank " +
                                 std::to_string(found + 1));
    for (int r = 0; r < k; ++r) H.witnesses.push_back(*wit[r]);
    return H;
}

struct InvariantReport {
    bool ok = true;
    std::string detail;
};

/// Structural checks every hierarchy must pass: values are multiples of the
/// step, weakly increasing, and ⌈r/ℓ⌉ℓ <= τ_r <= ⌈(ν-k+r)/ℓ⌉ℓ. When
/// `strict_residues` is set (families with guaranteed axioms), each residue
/// subsequence τ_h, τ_{h+ℓ}, ... must increase strictly. Accepts a prefix
/// shorter than k so budget-truncated hierarchies can still be checked.
inline InvariantReport hierarchy_invariants(const std::vector<int>& tau, int k, int nu, int ell,
                                            bool strict_residues) {
    InvariantReport rep;
    auto fail = [&](std::string why) {
        rep.ok = false;
        rep.detail = std::move(why);
        return rep;
    };
    if (static_cast<int>(tau.size()) > k) return fail("more values than the code dimension");
    for (int r = 1; r <= static_cast<int>(tau.size()); ++r) {
        const int v = tau[r - 1];
        if (v % ell != 0)
            return fail("value " + std::to_string(v) + " at rank " + std::to_string(r) +
                        " is not a multiple of the step");
        const int lo = (r + ell - 1) / ell * ell;
        const int hi = (nu - k + r + ell - 1) / ell * ell;
        if (v < lo || v > hi)
            return fail("value " + std::to_string(v) + " at rank " + std::to_string(r) +
                        " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
        if (r > 1 && v < tau[r - 2]) return fail("not weakly increasing at rank " + std::to_string(r));
        if (strict_residues && r > ell && v <= tau[r - 1 - ell])
            return fail("residue class not strictly increasing at rank " + std::to_string(r));
    }
    return rep;
}

}  // namespace genwt
