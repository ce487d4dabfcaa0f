#ifndef HIRSCHLOOP_HIRSCH_HPP
#define HIRSCHLOOP_HIRSCH_HPP

#include "element.hpp"

namespace hirsch {

// Shared symbolic context: the generator table, the resolution differential
// d, the perturbation h, and the registries of cup-one / sqcup-2 words.
//
// Values of the binary operations on generator pairs are named generators
// (word families); on decomposables the operations are evaluated recursively
// through the Hirsch extension rules.  d-rules of word generators are
// installed on first use.
class HirschCtx {
public:
    explicit HirschCtx(GenTable& tab) : tab_(tab) {}

    GenTable& tab() { return tab_; }
    const GenTable& tab() const { return tab_; }
    RuleSet& d() { return d_; }
    const RuleSet& d() const { return d_; }
    RuleSet& h() { return h_; }
    const RuleSet& h() const { return h_; }

    void set_d(GenId g, Element v) { d_.set(g, std::move(v)); }
    void set_h(GenId g, Element v) { h_.set(g, std::move(v)); }

    // cup-one product, bilinear; generator pairs become Cup1Word generators.
    Element cup1(const Element& a, const Element& b);
    // sqcup-2 product; generator pairs become SqcupWord generators.
    Element sqcup2(const Element& a, const Element& b);
    // cupbar-1 variant; reduces to cup1 for even right argument.
    Element cupbar1(const Element& a, const Element& b);

    // d(a cup1 b) - [da cup1 b - (-1)^{|a|} a cup1 db + (-1)^{|a|} ab
    //               - (-1)^{|a|(|b|+1)} ba]; zero iff the boundary identity
    // holds exactly.
    Element check_cup1_boundary(const Element& a, const Element& b);
    // analogous residual for the cupbar-1 defining identity (odd |b|)
    Element check_cupbar1_boundary(const Element& a, const Element& b);
    // d(a sqcup2 b) residual against (uplus)
    Element check_sqcup2_boundary(const Element& a, const Element& b);

    // Apply d (resp. d+h) to an element, installing word rules on demand.
    Element d_apply(const Element& e);
    Element dh_apply(const Element& e);
    // h applied as a derivation; throws if h is unknown on a needed letter.
    Element h_apply(const Element& e);
    std::optional<Element> try_h_apply(const Element& e);
    std::optional<Element> try_dh_apply(const Element& e);

    // Ensure d-rule (and h-rule where determined) of a generator exists.
    void ensure_rules(GenId g);

    int total_degree(const Element& e) const;

    Element cup1_pow(const Element& a, int n); // left-normalized a cup1 ... cup1 a

private:
    GenTable& tab_;
    RuleSet d_;
    RuleSet h_;

    Element cup1_word_word(const Letters& a, const Int& ca, const Letters& b, const Int& cb);
    Element cup1_right_atom(const Letters& a, GenId c); // (hirsch2)
    GenId make_cup1_word(GenId a, GenId b);             // flattening, assoc on V
    GenId make_sqcup_word(std::vector<GenId> multiset, bool& killed, Int& sign);
    GenId make_cupbar(GenId a, GenId b);

    Element sqcup2_gen_gen(GenId a, GenId b);
    Element sqcup2_word_word(const Letters& a, const Int& ca, const Letters& b, const Int& cb);
    Element eps_sqcup2(const Element& a, const Element& b); // 2(a u2 b) when a == b

    void install_cup1_word_rules(GenId w);
    void install_sqcup_word_rules(GenId w);
    void install_cupbar_rules(GenId w);

    int depth_ = 0;
    struct DepthGuard;
};

} // namespace hirsch

#endif
