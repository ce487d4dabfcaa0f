#ifndef HIRSCHLOOP_GENERATOR_HPP
#define HIRSCHLOOP_GENERATOR_HPP

#include "basics.hpp"
#include <map>
#include <string>
#include <vector>

namespace hirsch {

using GenId = uint32_t;

enum class Family {
    BaseX0,    // x_0, the resolution-degree-0 representative of a Hopf generator
    Xk,        // x_k, k >= 1
    XTilde,    // torsion companion of x_k
    Bkl,       // b^{i,j}_{k,l}
    BTilde,    // torsion companion of b_{k,l}
    Ckl,       // c_{k,l} transgression generator (t = 1)
    CklS,      // C^s_{k,l} for a partition s of length >= 2
    Witness,   // O^{-1}-generator: d(w) = p^r * (cocycle)
    Cup1Word,  // cup-one word on >= 2 letters
    SqcupWord, // sqcup_2 word on >= 2 letters
    CupBar,    // a "cupbar-1" pair with odd right argument
    VAux,      // opaque v^{i,j}_{k,l} component
    Aux,       // other auxiliary generators
};

struct GenInfo {
    std::string id;         // unique printable name
    Family family = Family::Aux;
    int res_degree = 0;     // <= 0
    int int_degree = 0;     // >= 0
    std::string parent;     // Hopf generator this derives from, if any
    // family indices; meaning depends on family (k, l, upper i, upper j)
    int k = 0, l = 0, ui = 0, uj = 0;
    std::vector<int> partition;      // for CklS
    std::vector<GenId> letters;      // for Cup1Word / SqcupWord / CupBar
    bool decomposable_hint = false;  // counts as decomposable in D_p
    bool opaque = false;             // excluded from audits

    int total_degree() const { return int_degree + res_degree; }
};

// Interned generator table. Construction order is deterministic; ids are
// handed out sequentially.
class GenTable {
public:
    GenId intern(GenInfo info);
    bool contains(const std::string& id) const { return index_.count(id) != 0; }
    GenId find(const std::string& id) const;
    const GenInfo& operator[](GenId g) const { return infos_[g]; }
    GenInfo& mut(GenId g) { return infos_[g]; }
    size_t size() const { return infos_.size(); }

    int total_degree(GenId g) const { return infos_[g].total_degree(); }

private:
    std::vector<GenInfo> infos_;
    std::map<std::string, GenId> index_;
};

} // namespace hirsch

#endif
