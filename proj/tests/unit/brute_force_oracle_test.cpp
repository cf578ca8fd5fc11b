// Independent check of the world enumerator: explicit worlds (entities, their noun/adjective
// types, unary body facts and a full binary relation matrix) evaluated directly.
#include "sicck/core/seeds.hpp"
#include "sicck/modify/engine.hpp"
#include "sicck/natlog/annotate.hpp"
#include "test_data.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace sicck;
using namespace sicck::natlog;

namespace {

struct Keys {
    std::vector<std::string> items;
    int operator()(const std::string& k) const {
        auto it = std::find(items.begin(), items.end(), k);
        return it == items.end() ? -1 : static_cast<int>(it - items.begin());
    }
    int add(const std::string& k) {
        if (int i = (*this)(k); i >= 0) return i;
        items.push_back(k);
        return static_cast<int>(items.size()) - 1;
    }
};

class BruteForce {
public:
    BruteForce(const QuantifiedProposition& p, const QuantifiedProposition& h, const std::vector<Axiom>& axioms,
               bool presuppose)
        : props_{p, h}, presuppose_(presuppose) {
        for (const auto& prop : props_) {
            for (const auto* np : {&prop.subject, prop.object ? &*prop.object : nullptr}) {
                if (!np) continue;
                nouns_.insert(types_.add(np->noun));
                for (const auto& a : np->adjectives) cooc_[types_.add(a)].insert(types_(np->noun));
            }
            for (const auto& a : prop.adverbs) unary_.add(a);
            (prop.object ? binary_ : unary_).add(prop.verb);
        }
        for (const auto& ax : axioms) axioms_.push_back(ax);
        const std::size_t nt = types_.items.size();
        std::vector<std::vector<bool>> sub(nt, std::vector<bool>(nt));
        for (std::size_t i = 0; i < nt; ++i) sub[i][i] = true;
        for (const auto& ax : axioms_) {
            if (ax.kind == Axiom::Kind::Subset && types_(ax.a) >= 0 && types_(ax.b) >= 0) sub[types_(ax.a)][types_(ax.b)] = true;
        }
        for (std::size_t k = 0; k < nt; ++k)
            for (std::size_t i = 0; i < nt; ++i)
                for (std::size_t j = 0; j < nt; ++j)
                    if (sub[i][k] && sub[k][j]) sub[i][j] = true;
        for (unsigned m = 1; m < (1u << nt); ++m) {
            bool ok = false;
            for (int n : nouns_) ok = ok || ((m >> n) & 1u);
            for (std::size_t i = 0; i < nt && ok; ++i) {
                if (!((m >> i) & 1u)) continue;
                for (std::size_t j = 0; j < nt; ++j) {
                    if (sub[i][j] && !((m >> j) & 1u)) ok = false;
                    if (j != i && ((m >> j) & 1u) && nouns_.count(int(i)) && nouns_.count(int(j)) && !sub[i][j] && !sub[j][i]) ok = false;
                }
                if (cooc_.count(int(i))) {
                    bool any = false;
                    for (int n : cooc_[int(i)]) any = any || ((m >> n) & 1u);
                    ok = ok && any;
                }
            }
            for (const auto& ax : axioms_) {
                const int a = types_(ax.a), b = types_(ax.b);
                if (a < 0 || b < 0) continue;
                const bool A = (m >> a) & 1u, B = (m >> b) & 1u;
                if (ax.kind == Axiom::Kind::Disjoint && A && B) ok = false;
                if (ax.kind == Axiom::Kind::Cover && !A && !B) ok = false;
            }
            if (ok) masks_.push_back(m);
        }
    }

    // Which (premise, hypothesis) truth combinations occur among worlds of up to n entities.
    std::set<std::pair<bool, bool>> combos(int max_entities) {
        std::set<std::pair<bool, bool>> out;
        for (int n = 1; n <= max_entities; ++n) {
            n_ = n;
            type_of_.assign(n, 0);
            enum_types(0, out);
        }
        return out;
    }

    // Bits of unary plus binary facts per world at n entities.
    int fact_bits(int n) const {
        return static_cast<int>(unary_.items.size()) * n + static_cast<int>(binary_.items.size()) * n * n;
    }

private:
    void enum_types(int i, std::set<std::pair<bool, bool>>& out) {
        if (out.size() == 4) return;
        if (i == n_) {
            for (const auto& ax : axioms_) {
                if (ax.kind != Axiom::Kind::Singleton) continue;
                int c = 0;
                for (int e = 0; e < n_; ++e) c += (type_of_[e] >> types_(ax.a)) & 1u;
                if (c != 1) return;
            }
            const int ub = static_cast<int>(unary_.items.size()), bb = static_cast<int>(binary_.items.size());
            const unsigned long long facts_u = 1ull << (ub * n_);
            const unsigned long long facts_b = 1ull << (bb * n_ * n_);
            for (unsigned long long fu = 0; fu < facts_u; ++fu)
                for (unsigned long long fb = 0; fb < facts_b; ++fb) {
                    uf_ = fu;
                    bf_ = fb;
                    if (!facts_ok()) continue;
                    bool pres = true;
                    bool v[2];
                    for (int s = 0; s < 2; ++s) v[s] = eval(props_[s], pres);
                    if (pres) out.insert({v[0], v[1]});
                    if (out.size() == 4) return;
                }
            return;
        }
        for (unsigned m : masks_) {
            type_of_[i] = m;
            enum_types(i + 1, out);
        }
    }

    bool u(int e, int pred) const { return (uf_ >> (e * unary_.items.size() + pred)) & 1u; }
    bool b(int x, int y, int pred) const { return (bf_ >> ((x * n_ + y) * binary_.items.size() + pred)) & 1u; }

    bool facts_ok() const {
        for (const auto& ax : axioms_) {
            if (ax.kind == Axiom::Kind::Singleton) continue;
            if (ax.kind == Axiom::Kind::ConverseExclusive) {
                int ea = -1, eb = -1;
                for (int e = 0; e < n_; ++e) {
                    if ((type_of_[e] >> types_(ax.a)) & 1u) ea = e;
                    if ((type_of_[e] >> types_(ax.b)) & 1u) eb = e;
                }
                const int r = binary_(ax.relation);
                if (ea >= 0 && eb >= 0 && r >= 0 && b(ea, eb, r) == b(eb, ea, r)) return false;
                continue;
            }
            auto check = [&](bool A, bool B) {
                if (ax.kind == Axiom::Kind::Subset) return !A || B;
                if (ax.kind == Axiom::Kind::Disjoint) return !(A && B);
                return A || B;
            };
            for (int x = 0; x < n_; ++x) {
                if (unary_(ax.a) >= 0 && unary_(ax.b) >= 0 && !check(u(x, unary_(ax.a)), u(x, unary_(ax.b)))) return false;
                for (int y = 0; y < n_; ++y) {
                    if (binary_(ax.a) >= 0 && binary_(ax.b) >= 0 && !check(b(x, y, binary_(ax.a)), b(x, y, binary_(ax.b))))
                        return false;
                    if (ax.kind == Axiom::Kind::Disjoint) {
                        if (unary_(ax.a) >= 0 && binary_(ax.b) >= 0 && u(x, unary_(ax.a)) && b(x, y, binary_(ax.b))) return false;
                        if (unary_(ax.b) >= 0 && binary_(ax.a) >= 0 && u(x, unary_(ax.b)) && b(x, y, binary_(ax.a))) return false;
                    }
                }
            }
        }
        return true;
    }

    bool member(int e, const NounPhraseMeaning& np) const {
        if (!((type_of_[e] >> types_(np.noun)) & 1u)) return false;
        for (const auto& a : np.adjectives)
            if (!((type_of_[e] >> types_(a)) & 1u)) return false;
        return true;
    }

    // restrictors of every, all but one and bare articles are nonempty
    bool presupposition_holds(const NounPhraseMeaning& np) const {
        if (!presuppose_) return true;
        if (np.quantifier != Quantifier::Every && np.quantifier != Quantifier::Definite &&
            np.quantifier != Quantifier::AllButOne) {
            return true;
        }
        for (int e = 0; e < n_; ++e)
            if (member(e, np)) return true;
        return false;
    }

    bool eval(const QuantifiedProposition& p, bool& presupposition_ok) const {
        presupposition_ok = presupposition_ok && presupposition_holds(p.subject) &&
                            (!p.object || presupposition_holds(*p.object));
        auto quant = [&](const NounPhraseMeaning& np, auto&& body) {
            unsigned n = 0, k = 0;
            for (int e = 0; e < n_; ++e) {
                if (!member(e, np)) continue;
                ++n;
                k += body(e) ? 1 : 0;
            }
            return quantifier_holds(np.quantifier, n, k) != np.negated;
        };
        return quant(p.subject, [&](int x) {
            bool adv = true;
            for (const auto& a : p.adverbs) adv = adv && u(x, unary_(a));
            bool core;
            if (p.object) {
                core = quant(*p.object, [&](int y) { return b(x, y, binary_(p.verb)); });
            } else {
                core = u(x, unary_(p.verb));
            }
            return (adv && core) != p.body_negated;
        });
    }

    QuantifiedProposition props_[2];
    bool presuppose_;
    Keys types_, unary_, binary_;
    std::set<int> nouns_;
    std::map<int, std::set<int>> cooc_;
    std::vector<Axiom> axioms_;
    std::vector<unsigned> masks_;
    int n_ = 0;
    std::vector<unsigned> type_of_;
    unsigned long long uf_ = 0, bf_ = 0;
};

Relation from_combos(const std::set<std::pair<bool, bool>>& c) {
    kernels::SetProfile p;
    p.x_only = c.count({true, false});
    p.y_only = c.count({false, true});
    p.both = c.count({true, true});
    p.neither = c.count({false, false});
    return classify_profile(p);
}

}  // namespace

TEST(BruteForceOracle, QuotientEnumerationMatchesExplicitWorlds) {
    const auto grammar = parser::Grammar::load(test::data_dir());
    const auto lexicon = Lexicon::load(test::data_dir() / "modifiers.tsv");
    const auto seeds = SeedTable::load(test::data_dir() / "seeds.tsv");
    std::size_t checked = 0;
    std::size_t index = 0;
    for (const auto& seed : seeds.seeds()) {
        const auto p0 = parser::parse_sentence(seed.premise, grammar);
        const auto h0 = parser::parse_sentence(seed.hypothesis, grammar);
        for (const auto& req : modify::enumerate_combinations(p0, h0, lexicon)) {
            for (const auto& v : modify::generate_variants(p0, h0, req, grammar)) {
                if (index++ % 4 != 0) continue;
                const auto p = interpret(v.premise);
                const auto h = interpret(v.hypothesis);
                if (p.temporal != Temporal::Now || h.temporal != Temporal::Now) continue;
                const auto axioms = derive_axioms(p, h, seed.relation, lexicon);
                const bool presuppose = !is_coreferent_relation(seed.relation);
                for (int n : {1, 2, 3}) {
                    // three entities only where the explicit world space stays small
                    if (n == 3 && BruteForce(p, h, axioms, presuppose).fact_bits(3) > 12) continue;
                    ModelOptions o;
                    o.max_entities = n;
                    o.presuppose_restrictors = presuppose;
                    const auto m = enumerate_models(p, h, o, axioms);
                    BruteForce bf(p, h, axioms, presuppose);
                    const auto combos = bf.combos(n);
                    ASSERT_EQ(m.worlds == 0, combos.empty()) << v.premise.render() << " / " << v.hypothesis.render();
                    if (combos.empty()) continue;
                    EXPECT_EQ(classify_relation(m.premise, m.hypothesis), from_combos(combos))
                        << "n=" << n << ": " << v.premise.render() << " / " << v.hypothesis.render();
                    ++checked;
                }
            }
        }
    }
    EXPECT_GT(checked, 1000u);
}
