#include "sicck/natlog/models.hpp"

#include "sicck/core/errors.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <fmt/format.h>
#include <functional>
#include <map>
#include <optional>
#include <set>

namespace sicck::natlog {

TruthSet::TruthSet(std::uint64_t universe_id, std::size_t universe_size, std::vector<std::uint64_t> members)
    : universe_id_(universe_id), size_(universe_size), members_(std::move(members)) {}

std::size_t TruthSet::count() const noexcept {
    std::size_t n = 0;
    for (auto w : members_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

Relation classify_profile(const kernels::SetProfile& p) noexcept {
    if (!p.x_only && !p.y_only) return Relation::Equivalence;
    if (!p.x_only) return Relation::ForwardEntailment;
    if (!p.y_only) return Relation::ReverseEntailment;
    if (!p.both && !p.neither) return Relation::Negation;
    if (!p.both) return Relation::Alternation;
    if (!p.neither) return Relation::Cover;
    return Relation::Independence;
}

namespace {

// universe mask with the first `size` bits set
std::vector<std::uint64_t> full_mask(std::size_t size) {
    std::vector<std::uint64_t> u((size + 63) / 64, ~std::uint64_t{0});
    if (size % 64 != 0) u.back() = (std::uint64_t{1} << (size % 64)) - 1;
    return u;
}

}  // namespace

Relation classify_relation(const TruthSet& x, const TruthSet& y) {
    if (x.universe_id() != y.universe_id() || x.universe_size() != y.universe_size()) {
        throw UniverseMismatch("truth sets come from different universes");
    }
    const auto u = full_mask(x.universe_size());
    return classify_profile(kernels::set_profile(x.words(), y.words(), u));
}

namespace {

// Per-predicate temporal profile of one entity or entity pair. Without temporal operators only
// kNever (false) and kAlways (true) are used.
constexpr std::uint8_t kNever = 0;
constexpr std::uint8_t kSometimesNotNow = 1;
constexpr std::uint8_t kNowNotAlways = 2;
constexpr std::uint8_t kAlways = 3;

bool holds_now(std::uint8_t code) { return code >= kNowNotAlways; }

bool temporal_atom(Temporal t, std::uint8_t code) {
    switch (t) {
        case Temporal::Now: return holds_now(code);
        case Temporal::Always: return code == kAlways;
        case Temporal::Never: return code == kNever;
    }
    return false;
}

kernels::CountTest count_test_for(Quantifier q) {
    switch (q) {
        case Quantifier::Every: return kernels::CountTest::All;
        case Quantifier::Some:
        case Quantifier::AtLeastOne:
        case Quantifier::Definite: return kernels::CountTest::Any;
        case Quantifier::No: return kernels::CountTest::None;
        case Quantifier::NotEvery: return kernels::CountTest::NotAll;
        case Quantifier::ExactlyOne: return kernels::CountTest::One;
        case Quantifier::AllButOne: return kernels::CountTest::AllButOne;
    }
    return kernels::CountTest::Any;
}

struct PairConstraint {
    Axiom::Kind kind;
    int a;
    int b;
};

bool valuation_ok(unsigned v, const std::vector<PairConstraint>& cs) {
    for (const auto& c : cs) {
        const bool a = (v >> c.a) & 1u;
        const bool b = (v >> c.b) & 1u;
        switch (c.kind) {
            case Axiom::Kind::Subset:
                if (a && !b) return false;
                break;
            case Axiom::Kind::Disjoint:
                if (a && b) return false;
                break;
            case Axiom::Kind::Cover:
                if (!a && !b) return false;
                break;
            default: break;
        }
    }
    return true;
}

// Profile vectors that some sequence of occasions realises: the current occasion and one witness
// per "sometimes" requirement, every occasion obeying the pointwise axioms and the always/never flags.
bool realizable(const std::vector<std::uint8_t>& codes, const std::vector<PairConstraint>& cs) {
    const std::size_t n = codes.size();
    std::vector<unsigned> allowed;
    for (unsigned v = 0; v < (1u << n); ++v) {
        if (!valuation_ok(v, cs)) continue;
        bool ok = true;
        for (std::size_t p = 0; p < n && ok; ++p) {
            const bool bit = (v >> p) & 1u;
            if (codes[p] == kAlways && !bit) ok = false;
            if (codes[p] == kNever && bit) ok = false;
        }
        if (ok) allowed.push_back(v);
    }
    unsigned now = 0;
    for (std::size_t p = 0; p < n; ++p) {
        if (holds_now(codes[p])) now |= 1u << p;
    }
    if (std::find(allowed.begin(), allowed.end(), now) == allowed.end()) return false;
    for (std::size_t p = 0; p < n; ++p) {
        const bool want = codes[p] == kSometimesNotNow;
        if (codes[p] != kSometimesNotNow && codes[p] != kNowNotAlways) continue;
        const bool witness = std::any_of(allowed.begin(), allowed.end(),
                                         [&](unsigned v) { return static_cast<bool>((v >> p) & 1u) == want; });
        if (!witness) return false;
    }
    return true;
}

std::vector<std::vector<std::uint8_t>> realizable_states(std::size_t n, const std::vector<PairConstraint>& cs,
                                                         bool temporal) {
    if (n > 6) throw OracleBudgetError("too many body predicates for the oracle");
    const std::vector<std::uint8_t> alphabet =
        temporal ? std::vector<std::uint8_t>{kNever, kSometimesNotNow, kNowNotAlways, kAlways}
                 : std::vector<std::uint8_t>{kNever, kAlways};
    std::vector<std::vector<std::uint8_t>> out;
    std::vector<std::uint8_t> codes(n, 0);
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= alphabet.size();
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        for (std::size_t p = 0; p < n; ++p) {
            codes[p] = alphabet[rest % alphabet.size()];
            rest /= alphabet.size();
        }
        if (realizable(codes, cs)) out.push_back(codes);
    }
    return out;
}

// One side (premise or hypothesis) compiled against the predicate indices.
struct CompiledSide {
    Quantifier q1 = Quantifier::Definite;
    bool neg1 = false;
    std::uint32_t r1 = 0;  // type predicates the subject restrictor needs
    bool has_object = false;
    Quantifier q2 = Quantifier::Definite;
    bool neg2 = false;
    std::uint32_t r2 = 0;
    bool body_negated = false;
    Temporal temporal = Temporal::Now;
    std::vector<int> adverbs;  // indices into unary body predicates
    int verb = -1;             // unary or binary body index, by has_object
    int subject_noun = -1;
    int object_noun = -1;
};

class Index {
public:
    int add(const std::string& key) {
        auto [it, inserted] = ids_.emplace(key, static_cast<int>(keys_.size()));
        if (inserted) keys_.push_back(key);
        return it->second;
    }
    int find(const std::string& key) const {
        const auto it = ids_.find(key);
        return it == ids_.end() ? -1 : it->second;
    }
    std::size_t size() const noexcept { return keys_.size(); }
    const std::string& key(std::size_t i) const { return keys_[i]; }

private:
    std::map<std::string, int> ids_;
    std::vector<std::string> keys_;
};

struct ConverseCoupling {
    int relation = -1;  // binary predicate index
    int noun_a = -1;    // type predicate indices
    int noun_b = -1;
};

class Enumerator {
public:
    Enumerator(const QuantifiedProposition& p, const QuantifiedProposition& h, const ModelOptions& opt,
               const std::vector<Axiom>& axioms)
        : opt_(opt) {
        for (const auto* prop : {&p, &h}) {
            add_np_predicates(prop->subject);
            if (prop->object) add_np_predicates(*prop->object);
        }
        if (types_.size() > 16) throw OracleBudgetError("too many noun and adjective predicates for the oracle");
        for (const auto* prop : {&p, &h}) {
            for (const auto& a : prop->adverbs) unary_.add(a);
            (prop->object ? binary_ : unary_).add(prop->verb);
        }
        temporal_ = p.temporal != Temporal::Now || h.temporal != Temporal::Now;
        sides_[0] = compile(p);
        sides_[1] = compile(h);
        read_axioms(axioms);
        build_types();
        unary_states_ = realizable_states(unary_.size(), unary_constraints_, temporal_);
        binary_states_ = realizable_states(binary_.size(), binary_constraints_, temporal_);
        build_mixed_table();
    }

    ModelSet run() {
        std::vector<std::uint8_t> counts(types_list_.size(), 0);
        enumerate_counts(0, 0, counts);

        static std::atomic<std::uint64_t> next_universe{1};
        const std::uint64_t id = next_universe.fetch_add(1);
        const std::size_t w = n_[0].size();
        ModelSet out;
        out.worlds = w;
        for (int s = 0; s < 2; ++s) {
            std::vector<std::uint8_t> bytes(w);
            kernels::count_test(count_test_for(sides_[s].q1), sides_[s].neg1, n_[s], k_[s], bytes);
            std::vector<std::uint64_t> words((w + 63) / 64);
            kernels::pack_bits(bytes, words);
            (s == 0 ? out.premise : out.hypothesis) = TruthSet(id, w, std::move(words));
        }
        return out;
    }

private:
    void add_np_predicates(const NounPhraseMeaning& np) {
        nouns_.insert(types_.add(np.noun));
        for (const auto& a : np.adjectives) {
            const int ai = types_.add(a);
            adjective_nouns_[ai] |= 1u << types_.find(np.noun);
        }
    }

    std::uint32_t restrictor_mask(const NounPhraseMeaning& np) const {
        std::uint32_t m = 1u << types_.find(np.noun);
        for (const auto& a : np.adjectives) m |= 1u << types_.find(a);
        return m;
    }

    CompiledSide compile(const QuantifiedProposition& prop) const {
        CompiledSide c;
        c.q1 = prop.subject.quantifier;
        c.neg1 = prop.subject.negated;
        c.r1 = restrictor_mask(prop.subject);
        c.subject_noun = types_.find(prop.subject.noun);
        if (prop.object) {
            c.has_object = true;
            c.q2 = prop.object->quantifier;
            c.neg2 = prop.object->negated;
            c.r2 = restrictor_mask(*prop.object);
            c.object_noun = types_.find(prop.object->noun);
        }
        c.body_negated = prop.body_negated;
        c.temporal = prop.temporal;
        for (const auto& a : prop.adverbs) c.adverbs.push_back(unary_.find(a));
        c.verb = prop.object ? binary_.find(prop.verb) : unary_.find(prop.verb);
        return c;
    }

    void read_axioms(const std::vector<Axiom>& axioms) {
        const std::size_t nt = types_.size();
        sub_.assign(nt, std::vector<bool>(nt, false));
        for (std::size_t i = 0; i < nt; ++i) sub_[i][i] = true;
        for (const auto& ax : axioms) {
            switch (ax.kind) {
                case Axiom::Kind::Singleton: {
                    const int n = types_.find(ax.a);
                    if (n >= 0) singletons_.push_back(n);
                    break;
                }
                case Axiom::Kind::ConverseExclusive: {
                    if (coupling_.relation >= 0) throw InterpretationError("more than one converse-exclusive axiom");
                    const int r = binary_.find(ax.relation);
                    const int a = types_.find(ax.a);
                    const int b = types_.find(ax.b);
                    if (r >= 0 && a >= 0 && b >= 0) coupling_ = {r, a, b};
                    break;
                }
                default: read_pointwise(ax); break;
            }
        }
        if (coupling_.relation >= 0) {
            const auto single = [&](int n) { return std::find(singletons_.begin(), singletons_.end(), n) != singletons_.end(); };
            if (!single(coupling_.noun_a) || !single(coupling_.noun_b)) {
                throw InterpretationError("converse-exclusive axiom needs singleton arguments");
            }
        }
    }

    void read_pointwise(const Axiom& ax) {
        if (int a = types_.find(ax.a), b = types_.find(ax.b); a >= 0 && b >= 0) {
            type_constraints_.push_back({ax.kind, a, b});
            if (ax.kind == Axiom::Kind::Subset) sub_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
            return;
        }
        if (int a = unary_.find(ax.a), b = unary_.find(ax.b); a >= 0 && b >= 0) {
            unary_constraints_.push_back({ax.kind, a, b});
            return;
        }
        if (int a = binary_.find(ax.a), b = binary_.find(ax.b); a >= 0 && b >= 0) {
            binary_constraints_.push_back({ax.kind, a, b});
            return;
        }
        if (ax.kind == Axiom::Kind::Disjoint) {
            int u = unary_.find(ax.a), b = binary_.find(ax.b);
            if (u < 0 || b < 0) {
                u = unary_.find(ax.b);
                b = binary_.find(ax.a);
            }
            if (u >= 0 && b >= 0) mixed_disjoint_.emplace_back(u, b);
        }
        // axioms about predicates neither sentence mentions are irrelevant
    }

    void build_types() {
        // transitive closure of the subset order on type predicates
        const std::size_t nt = types_.size();
        for (std::size_t k = 0; k < nt; ++k)
            for (std::size_t i = 0; i < nt; ++i)
                for (std::size_t j = 0; j < nt; ++j)
                    if (sub_[i][k] && sub_[k][j]) sub_[i][j] = true;

        for (std::uint32_t mask = 1; mask < (1u << nt); ++mask) {
            if (type_allowed(mask)) types_list_.push_back(mask);
        }
        for (std::size_t t = 0; t < types_list_.size(); ++t) {
            const std::uint32_t m = types_list_[t];
            bool subj = false, obj = false;
            for (const auto& s : sides_) {
                subj |= ((m >> s.subject_noun) & 1u) != 0;
                if (s.has_object) obj |= ((m >> s.object_noun) & 1u) != 0;
            }
            if (subj) subject_types_.push_back(t);
            if (obj) object_types_.push_back(t);
        }
    }

    bool type_allowed(std::uint32_t mask) const {
        const std::size_t nt = types_.size();
        bool has_noun = false;
        for (std::size_t i = 0; i < nt; ++i) {
            if (!((mask >> i) & 1u)) continue;
            const int ii = static_cast<int>(i);
            if (nouns_.count(ii)) {
                has_noun = true;
                for (std::size_t j = 0; j < nt; ++j) {
                    if (j != i && ((mask >> j) & 1u) && nouns_.count(static_cast<int>(j)) && !sub_[i][j] && !sub_[j][i]) {
                        return false;  // unrelated nouns are disjoint
                    }
                }
            } else if (const auto it = adjective_nouns_.find(ii); it != adjective_nouns_.end() && !(mask & it->second)) {
                return false;  // adjectives only occur on the nouns they modify
            }
            for (std::size_t j = 0; j < nt; ++j) {
                if (sub_[i][j] && !((mask >> j) & 1u)) return false;
            }
        }
        return has_noun && valuation_ok(mask, type_constraints_);
    }

    void build_mixed_table() {
        for (std::uint8_t a = 0; a < 4; ++a) {
            for (std::uint8_t b = 0; b < 4; ++b) {
                mixed_ok_[a][b] = realizable({a, b}, {PairConstraint{Axiom::Kind::Disjoint, 0, 1}});
            }
        }
    }

    bool mixed_compatible(const std::vector<std::uint8_t>& u, const std::vector<std::uint8_t>& b) const {
        for (auto [ui, bi] : mixed_disjoint_) {
            if (!mixed_ok_[u[static_cast<std::size_t>(ui)]][b[static_cast<std::size_t>(bi)]]) return false;
        }
        return true;
    }

    int partner_noun(std::uint32_t type_mask) const {
        if (coupling_.relation < 0) return -1;
        if ((type_mask >> coupling_.noun_a) & 1u) return coupling_.noun_b;
        if ((type_mask >> coupling_.noun_b) & 1u) return coupling_.noun_a;
        return -1;
    }

    // Contribution of the c objects of one type to a subject's row: how many satisfy each side's
    // verb atom, and the relation profile toward the coupling partner.
    struct Contribution {
        std::uint8_t k[2] = {0, 0};
        std::int8_t couple = -1;
        auto operator<=>(const Contribution&) const = default;
    };

    // Signature of a row: (premise inner truth, hypothesis inner truth, coupling profile).
    using Signature = std::uint8_t;

    static Signature make_signature(bool p, bool h, int couple) {
        return static_cast<Signature>((p ? 1 : 0) | (h ? 2 : 0) | ((couple + 1) << 2));
    }

    const std::vector<Signature>& signatures(std::size_t subject_type, const std::vector<std::uint8_t>& counts) {
        std::vector<std::uint8_t> key{static_cast<std::uint8_t>(subject_type)};
        for (std::size_t t : object_types_) key.push_back(counts[t]);
        auto [it, inserted] = signature_cache_.try_emplace(key);
        if (!inserted) return it->second;

        const std::uint32_t mask = types_list_[subject_type];
        const int partner = partner_noun(mask);
        std::set<Signature> found;
        for (const auto& u : unary_states_) {
            // per object type, the distinct contributions its objects can make
            std::vector<std::vector<Contribution>> options;
            for (std::size_t t : object_types_) {
                const std::uint8_t c = counts[t];
                if (c == 0) continue;
                const bool is_partner = partner >= 0 && ((types_list_[t] >> partner) & 1u);
                options.push_back(contributions(t, c, u, is_partner));
                if (options.back().empty()) break;
            }
            if (!options.empty() && options.back().empty()) continue;
            combine(options, 0, Contribution{}, mask, u, counts, found);
        }
        it->second.assign(found.begin(), found.end());
        return it->second;
    }

    std::vector<Contribution> contributions(std::size_t object_type, std::uint8_t c, const std::vector<std::uint8_t>& u,
                                            bool is_partner) const {
        std::vector<std::size_t> usable;
        for (std::size_t s = 0; s < binary_states_.size(); ++s) {
            if (mixed_compatible(u, binary_states_[s])) usable.push_back(s);
        }
        std::set<Contribution> out;
        std::vector<std::size_t> pick(c, 0);
        // multisets of size c over usable states, as non-decreasing index sequences
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
            if (pos == c) {
                Contribution contrib;
                for (int s = 0; s < 2; ++s) {
                    const auto& side = sides_[s];
                    if (!side.has_object || (types_list_[object_type] & side.r2) != side.r2) continue;
                    for (std::size_t i = 0; i < c; ++i) {
                        const auto& st = binary_states_[usable[pick[i]]];
                        if (temporal_atom(side.temporal, st[static_cast<std::size_t>(side.verb)])) ++contrib.k[s];
                    }
                }
                if (is_partner && c == 1) {
                    contrib.couple = static_cast<std::int8_t>(binary_states_[usable[pick[0]]][static_cast<std::size_t>(coupling_.relation)]);
                }
                out.insert(contrib);
                return;
            }
            for (std::size_t s = from; s < usable.size(); ++s) {
                pick[pos] = s;
                rec(pos + 1, s);
            }
        };
        rec(0, 0);
        return {out.begin(), out.end()};
    }

    void combine(const std::vector<std::vector<Contribution>>& options, std::size_t i, Contribution acc,
                 std::uint32_t mask, const std::vector<std::uint8_t>& u, const std::vector<std::uint8_t>& counts,
                 std::set<Signature>& found) const {
        if (i == options.size()) {
            bool inner[2] = {false, false};
            for (int s = 0; s < 2; ++s) {
                const auto& side = sides_[s];
                if ((mask & side.r1) != side.r1) continue;
                bool adv = true;
                for (int a : side.adverbs) adv = adv && holds_now(u[static_cast<std::size_t>(a)]);
                bool core;
                if (side.has_object) {
                    unsigned n2 = 0;
                    for (std::size_t t : object_types_) {
                        if ((types_list_[t] & side.r2) == side.r2) n2 += counts[t];
                    }
                    core = quantifier_holds(side.q2, n2, acc.k[s]) != side.neg2;
                } else {
                    core = temporal_atom(side.temporal, u[static_cast<std::size_t>(side.verb)]);
                }
                inner[s] = (adv && core) != side.body_negated;
            }
            found.insert(make_signature(inner[0], inner[1], acc.couple));
            return;
        }
        for (const auto& c : options[i]) {
            Contribution next = acc;
            next.k[0] = static_cast<std::uint8_t>(next.k[0] + c.k[0]);
            next.k[1] = static_cast<std::uint8_t>(next.k[1] + c.k[1]);
            if (c.couple >= 0) next.couple = c.couple;
            combine(options, i + 1, next, mask, u, counts, found);
        }
    }

    void enumerate_counts(std::size_t t, int total, std::vector<std::uint8_t>& counts) {
        if (t == types_list_.size()) {
            if (total >= 1) visit_counts(counts);
            return;
        }
        for (int c = 0; total + c <= opt_.max_entities; ++c) {
            counts[t] = static_cast<std::uint8_t>(c);
            enumerate_counts(t + 1, total + c, counts);
        }
        counts[t] = 0;
    }

    unsigned restricted_count(const std::vector<std::uint8_t>& counts, std::uint32_t r) const {
        unsigned n = 0;
        for (std::size_t t = 0; t < types_list_.size(); ++t) {
            if ((types_list_[t] & r) == r) n += counts[t];
        }
        return n;
    }

    void visit_counts(const std::vector<std::uint8_t>& counts) {
        for (int noun : singletons_) {
            if (restricted_count(counts, 1u << noun) != 1) return;
        }
        unsigned n1[2];
        for (int s = 0; s < 2; ++s) {
            const auto& side = sides_[s];
            n1[s] = restricted_count(counts, side.r1);
            if (opt_.presuppose_restrictors) {
                if (presupposes_restrictor(side.q1) && n1[s] == 0) return;
                if (side.has_object && presupposes_restrictor(side.q2) && restricted_count(counts, side.r2) == 0) return;
            }
        }
        std::vector<std::pair<std::size_t, const std::vector<Signature>*>> groups;
        for (std::size_t t : subject_types_) {
            if (counts[t] == 0) continue;
            const auto& sig = signatures(t, counts);
            if (sig.empty()) return;  // no admissible row for this entity type
            groups.emplace_back(t, &sig);
        }
        RowState acc;
        enumerate_rows(groups, 0, counts, acc, n1);
    }

    struct RowState {
        unsigned k[2] = {0, 0};
        int couple_a = -1;  // profile of the coupling relation from the a-entity to the b-entity
        int couple_b = -1;
    };

    void enumerate_rows(const std::vector<std::pair<std::size_t, const std::vector<Signature>*>>& groups, std::size_t g,
                        const std::vector<std::uint8_t>& counts, RowState acc, const unsigned* n1) {
        if (g == groups.size()) {
            if (acc.couple_a >= 0 && acc.couple_b >= 0 && acc.couple_a + acc.couple_b != kAlways) return;
            if (n_[0].size() >= opt_.max_worlds) {
                throw OracleBudgetError(fmt::format("more than {} worlds", opt_.max_worlds));
            }
            for (int s = 0; s < 2; ++s) {
                n_[s].push_back(static_cast<std::uint8_t>(n1[s]));
                k_[s].push_back(static_cast<std::uint8_t>(acc.k[s]));
            }
            return;
        }
        const auto [type, sigs] = groups[g];
        const std::uint32_t mask = types_list_[type];
        const unsigned c = counts[type];
        bool in_r1[2];
        for (int s = 0; s < 2; ++s) in_r1[s] = (mask & sides_[s].r1) == sides_[s].r1;
        const bool is_a = coupling_.relation >= 0 && ((mask >> coupling_.noun_a) & 1u);
        const bool is_b = coupling_.relation >= 0 && ((mask >> coupling_.noun_b) & 1u);

        std::vector<std::size_t> pick(c, 0);
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
            if (pos == c) {
                RowState next = acc;
                for (std::size_t i = 0; i < c; ++i) {
                    const Signature sig = (*sigs)[pick[i]];
                    if (in_r1[0] && (sig & 1)) ++next.k[0];
                    if (in_r1[1] && (sig & 2)) ++next.k[1];
                    const int couple = (sig >> 2) - 1;
                    if (is_a) next.couple_a = couple;
                    if (is_b) next.couple_b = couple;
                }
                enumerate_rows(groups, g + 1, counts, next, n1);
                return;
            }
            for (std::size_t s = from; s < sigs->size(); ++s) {
                pick[pos] = s;
                rec(pos + 1, s);
            }
        };
        rec(0, 0);
    }

    ModelOptions opt_;
    Index types_;    // nouns and adjectives
    Index unary_;    // adverbs and intransitive verbs
    Index binary_;   // transitive verbs
    std::set<int> nouns_;
    std::map<int, std::uint32_t> adjective_nouns_;
    bool temporal_ = false;
    CompiledSide sides_[2];

    std::vector<std::vector<bool>> sub_;
    std::vector<PairConstraint> type_constraints_;
    std::vector<PairConstraint> unary_constraints_;
    std::vector<PairConstraint> binary_constraints_;
    std::vector<std::pair<int, int>> mixed_disjoint_;
    std::vector<int> singletons_;
    ConverseCoupling coupling_;

    std::vector<std::uint32_t> types_list_;
    std::vector<std::size_t> subject_types_;
    std::vector<std::size_t> object_types_;
    std::vector<std::vector<std::uint8_t>> unary_states_;
    std::vector<std::vector<std::uint8_t>> binary_states_;
    bool mixed_ok_[4][4] = {};
    std::map<std::vector<std::uint8_t>, std::vector<Signature>> signature_cache_;

    std::vector<std::uint8_t> n_[2];
    std::vector<std::uint8_t> k_[2];
};

}  // namespace

ModelSet enumerate_models(const QuantifiedProposition& premise, const QuantifiedProposition& hypothesis,
                          const ModelOptions& options, const std::vector<Axiom>& axioms) {
    if (options.max_entities < 1 || options.max_entities > 5) {
        throw OracleBudgetError(fmt::format("maxEntities must be in [1, 5], got {}", options.max_entities));
    }
    return Enumerator(premise, hypothesis, options, axioms).run();
}

}  // namespace sicck::natlog
