#ifndef HIRSCHLOOP_HOPF_HPP
#define HIRSCHLOOP_HOPF_HPP

#include "basics.hpp"
#include <optional>
#include <string>
#include <vector>

namespace hirsch {

// An operation-table entry: either a named generator, an explicit zero, or
// no data at all (in which case degree reasoning decides).
struct OpValue {
    enum Kind { Unknown, Zero, Named } kind = Unknown;
    std::string name;

    static OpValue unknown() { return {}; }
    static OpValue zero() { return {Zero, {}}; }
    static OpValue named(std::string n) { return {Named, std::move(n)}; }
};

struct BocksteinEntry {
    int order = 0;
    std::string value;
};

struct HopfGen {
    std::string name;
    int degree = 0;
    int height_n = 1; // kInfHeight for infinite height
    int torsion_order = 0;
    Int lambda = 1;
    OpValue p1;   // P_1 (= Sq_1 at p = 2)
    OpValue psi1; // psi_{1,n}
    std::optional<BocksteinEntry> bockstein;

    bool odd() const { return degree % 2 != 0; }
    bool infinite_height() const;
};

constexpr int kInfHeight = -1;

struct HopfInput {
    int prime = 2;
    std::vector<HopfGen> generators;
    bool tables_complete = false;

    const HopfGen* find(const std::string& name) const;
    const HopfGen& at(const std::string& name) const;
    bool degree_has_generator(int d) const;
    // true if some generator's P1 table names x
    bool in_image_P1(const std::string& name) const;
};

HopfInput parse_hopf_input(const std::string& json_text);
std::string hopf_input_digest(const HopfInput& in);

} // namespace hirsch

#endif
