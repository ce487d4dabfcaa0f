#ifndef HIRSCHLOOP_ELEMENT_HPP
#define HIRSCHLOOP_ELEMENT_HPP

#include "generator.hpp"
#include <functional>
#include <optional>
#include <unordered_map>

namespace hirsch {

using Letters = std::vector<GenId>;

// Normalized integer-linear combination of words in the free algebra T(V).
// The empty word is the unit. Words are kept in lexicographic order of their
// letter sequences; zero coefficients are dropped.
class Element {
public:
    Element() = default;
    static Element zero() { return Element(); }
    static Element unit(Int c = 1);
    static Element gen(GenId g, Int c = 1);
    static Element word(Letters ls, Int c = 1);

    bool is_zero() const { return words_.empty(); }
    size_t term_count() const { return words_.size(); }
    const std::map<Letters, Int>& words() const { return words_; }

    Element& add_word(const Letters& ls, const Int& c);
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element operator*(const Element& o) const; // concatenation product
    Element scaled(const Int& c) const;
    bool operator==(const Element& o) const { return words_ == o.words_; }
    bool operator!=(const Element& o) const { return words_ != o.words_; }

    Element reduced(const Ring& r) const;

    // Bidegree of a homogeneous element; throws on mixed bidegrees.
    // Returns nullopt for zero.
    struct Bidegree {
        int res = 0, internal = 0;
        int total() const { return res + internal; }
        bool operator==(const Bidegree& o) const {
            return res == o.res && internal == o.internal;
        }
    };
    std::optional<Bidegree> bidegree(const GenTable& tab) const;
    bool is_homogeneous(const GenTable& tab) const;

    // Membership in D_p(RH) = p.RH + RH^+.RH^+ (plus decomposable-by-hint
    // single letters).
    bool is_decomposable(const GenTable& tab, int p) const;

    // Sub-sum of words of length exactly one (the V-linear part).
    Element linear_part() const;

    // True if some word contains a generator satisfying pred.
    bool any_letter(const std::function<bool(GenId)>& pred) const;

    std::string str(const GenTable& tab) const;

private:
    std::map<Letters, Int> words_;
};

// A derivation-like assignment on generators.  Generators without a rule are
// "unresolved"; apply() reports them by name.
class RuleSet {
public:
    void set(GenId g, Element value) { rules_[g] = std::move(value); }
    bool defined(GenId g) const { return rules_.count(g) != 0; }
    const Element& get(GenId g) const;
    // Leibniz extension with Koszul sign (-1)^{|a|} on total degree.
    Element apply(const Element& e, const GenTable& tab) const;
    // Variant that treats missing rules as opaque: returns nullopt if any
    // needed rule is missing.
    std::optional<Element> try_apply(const Element& e, const GenTable& tab) const;

    size_t size() const { return rules_.size(); }
    const std::unordered_map<GenId, Element>& rules() const { return rules_; }

private:
    std::unordered_map<GenId, Element> rules_;
};

} // namespace hirsch

#endif
