#include "hopf.hpp"
#include <json.hpp>
#include <set>
#include <sstream>

namespace hirsch {

using nlohmann::json;

bool HopfGen::infinite_height() const { return height_n == kInfHeight; }

const HopfGen* HopfInput::find(const std::string& name) const {
    for (const auto& g : generators)
        if (g.name == name)
            return &g;
    return nullptr;
}

const HopfGen& HopfInput::at(const std::string& name) const {
    const HopfGen* g = find(name);
    if (!g)
        throw error("unknown Hopf generator: " + name);
    return *g;
}

bool HopfInput::degree_has_generator(int d) const {
    for (const auto& g : generators)
        if (g.degree == d)
            return true;
    return false;
}

bool HopfInput::in_image_P1(const std::string& name) const {
    for (const auto& g : generators)
        if (g.p1.kind == OpValue::Named && g.p1.name == name)
            return true;
    return false;
}

namespace {

OpValue parse_op(const json& ops, const char* key, const std::string& path) {
    if (!ops.contains(key))
        return OpValue::unknown();
    const json& v = ops.at(key);
    if (v.is_null())
        return OpValue::zero();
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s.empty() || s == "0")
            return OpValue::zero();
        return OpValue::named(s);
    }
    throw error("parse error at " + path + "." + key + ": expected string or null");
}

} // namespace

HopfInput parse_hopf_input(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const std::exception& e) {
        throw error(std::string("parse error: invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw error("parse error: top level must be an object");
    HopfInput in;
    if (!j.contains("prime") || !j.at("prime").is_number_integer())
        throw error("parse error at prime: required integer");
    in.prime = j.at("prime").get<int>();
    if (!is_prime(in.prime))
        throw error("parse error at prime: " + std::to_string(in.prime) + " is not prime");
    in.tables_complete = j.value("tables_complete", false);

    if (!j.contains("generators") || !j.at("generators").is_array())
        throw error("parse error at generators: required array");
    std::set<std::string> names;
    for (size_t idx = 0; idx < j.at("generators").size(); ++idx) {
        const json& jg = j.at("generators")[idx];
        std::string path = "generators[" + std::to_string(idx) + "]";
        HopfGen g;
        if (!jg.contains("name") || !jg.at("name").is_string())
            throw error("parse error at " + path + ".name: required string");
        g.name = jg.at("name").get<std::string>();
        if (!names.insert(g.name).second)
            throw error("parse error at " + path + ".name: duplicate generator " + g.name);
        if (!jg.contains("degree") || !jg.at("degree").is_number_integer())
            throw error("parse error at " + path + ".degree: required integer");
        g.degree = jg.at("degree").get<int>();
        if (g.degree < 2)
            throw error("parse error at " + path + ".degree: must be >= 2 (simply connected)");
        if (jg.contains("height")) {
            const json& h = jg.at("height");
            if (h.is_string() && (h.get<std::string>() == "inf" || h.get<std::string>() == "infinity"))
                g.height_n = kInfHeight;
            else if (h.is_number_integer() && h.get<int>() >= 1)
                g.height_n = h.get<int>();
            else
                throw error("parse error at " + path + ".height: integer >= 1 or \"inf\"");
        }
        g.torsion_order = jg.value("torsion_order", 0);
        if (g.torsion_order < 0)
            throw error("parse error at " + path + ".torsion_order: must be >= 0");
        if (jg.contains("lambda")) {
            g.lambda = jg.at("lambda").get<long>();
        } else {
            g.lambda = (g.odd() && g.height_n == 1 && in.prime > 2) ? 2 : 1;
        }
        if (g.lambda % in.prime == 0)
            throw error("parse error at " + path + ".lambda: divisible by p");
        if (jg.contains("ops")) {
            const json& ops = jg.at("ops");
            g.p1 = parse_op(ops, "P1", path + ".ops");
            OpValue sq1 = parse_op(ops, "sq1", path + ".ops");
            if (sq1.kind != OpValue::Unknown) {
                if (in.prime != 2)
                    throw error("parse error at " + path + ".ops.sq1: sq1 is a p = 2 table");
                if (g.p1.kind != OpValue::Unknown &&
                    !(g.p1.kind == sq1.kind && g.p1.name == sq1.name))
                    throw error("parse error at " + path + ".ops: P1 and sq1 disagree");
                g.p1 = sq1;
            }
            g.psi1 = parse_op(ops, "psi1", path + ".ops");
            if (ops.contains("bockstein") && !ops.at("bockstein").is_null()) {
                const json& b = ops.at("bockstein");
                BocksteinEntry e;
                e.order = b.value("order", 1);
                if (!b.contains("value") || !b.at("value").is_string())
                    throw error("parse error at " + path + ".ops.bockstein.value: required string");
                e.value = b.at("value").get<std::string>();
                if (e.order < 1)
                    throw error("parse error at " + path + ".ops.bockstein.order: must be >= 1");
                g.bockstein = e;
                if (g.torsion_order == 0)
                    g.torsion_order = e.order;
                else if (g.torsion_order != e.order)
                    throw error("parse error at " + path + ": torsion_order disagrees with bockstein order");
            }
        }
        in.generators.push_back(std::move(g));
    }

    // degree audits of the operation tables (Eq. (1) shapes)
    for (const auto& g : in.generators) {
        int p = in.prime;
        std::string path = "generators." + g.name;
        if (g.p1.kind == OpValue::Named) {
            const HopfGen* t = in.find(g.p1.name);
            if (!t)
                throw error("parse error at " + path + ".ops.P1: unknown target " + g.p1.name);
            if (t->degree != (g.degree - 1) * p + 1)
                throw error("parse error at " + path + ".ops.P1: target degree " +
                            std::to_string(t->degree) + " != (m-1)p+1 = " +
                            std::to_string((g.degree - 1) * p + 1));
        }
        if (g.psi1.kind == OpValue::Named) {
            const HopfGen* t = in.find(g.psi1.name);
            if (!t)
                throw error("parse error at " + path + ".ops.psi1: unknown target " + g.psi1.name);
            int want = g.height_n == 1 ? (g.degree - 1) * p * p + 1
                                       : (g.degree * (g.height_n + 1) - 2) * p + 1;
            if (g.infinite_height())
                throw error("parse error at " + path + ".ops.psi1: psi_{1,n} needs finite height");
            if (t->degree != want)
                throw error("parse error at " + path + ".ops.psi1: target degree " +
                            std::to_string(t->degree) + " != " + std::to_string(want));
        }
        if (g.bockstein) {
            const HopfGen* t = in.find(g.bockstein->value);
            if (!t)
                throw error("parse error at " + path + ".ops.bockstein: unknown witness " +
                            g.bockstein->value);
            if (t->degree != g.degree + 1)
                throw error("parse error at " + path + ".ops.bockstein: witness degree " +
                            std::to_string(t->degree) + " != m+1");
            if (t->torsion_order != 0)
                throw error("parse error at " + path +
                            ".ops.bockstein: witness must be a torsion-free generator");
        }
    }
    return in;
}

std::string hopf_input_digest(const HopfInput& in) {
    // FNV-1a over a canonical rendering
    std::ostringstream os;
    os << "p=" << in.prime << ";tc=" << in.tables_complete << ";";
    for (const auto& g : in.generators) {
        os << g.name << ":" << g.degree << ":" << g.height_n << ":" << g.torsion_order << ":"
           << g.lambda.str() << ":";
        auto op = [&](const OpValue& v) {
            os << v.kind << "," << v.name << ";";
        };
        op(g.p1);
        op(g.psi1);
        if (g.bockstein)
            os << "b" << g.bockstein->order << "," << g.bockstein->value << ";";
    }
    uint64_t h = 1469598103934665603ull;
    for (char c : os.str()) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    std::ostringstream hex;
    hex << std::hex << h;
    return hex.str();
}

} // namespace hirsch
