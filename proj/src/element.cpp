#include "element.hpp"
#include <sstream>

namespace hirsch {

Element Element::unit(Int c) {
    Element e;
    if (c != 0)
        e.words_.emplace(Letters{}, std::move(c));
    return e;
}

Element Element::gen(GenId g, Int c) {
    Element e;
    if (c != 0)
        e.words_.emplace(Letters{g}, std::move(c));
    return e;
}

Element Element::word(Letters ls, Int c) {
    Element e;
    if (c != 0)
        e.words_.emplace(std::move(ls), std::move(c));
    return e;
}

Element& Element::add_word(const Letters& ls, const Int& c) {
    if (c == 0)
        return *this;
    auto it = words_.find(ls);
    if (it == words_.end()) {
        words_.emplace(ls, c);
    } else {
        it->second += c;
        if (it->second == 0)
            words_.erase(it);
    }
    return *this;
}

Element Element::operator+(const Element& o) const {
    Element r = *this;
    r += o;
    return r;
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [ls, c] : o.words_)
        add_word(ls, c);
    return *this;
}

Element Element::operator-(const Element& o) const {
    Element r = *this;
    r -= o;
    return r;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [ls, c] : o.words_)
        add_word(ls, -c);
    return *this;
}

Element Element::operator-() const {
    Element r;
    for (const auto& [ls, c] : words_)
        r.words_.emplace(ls, -c);
    return r;
}

Element Element::operator*(const Element& o) const {
    Element r;
    for (const auto& [la, ca] : words_)
        for (const auto& [lb, cb] : o.words_) {
            Letters ls = la;
            ls.insert(ls.end(), lb.begin(), lb.end());
            r.add_word(ls, ca * cb);
        }
    return r;
}

Element Element::scaled(const Int& c) const {
    Element r;
    if (c == 0)
        return r;
    for (const auto& [ls, cc] : words_)
        r.words_.emplace(ls, cc * c);
    return r;
}

Element Element::reduced(const Ring& ring) const {
    if (ring.is_integral())
        return *this;
    Element r;
    for (const auto& [ls, c] : words_) {
        Int cc = ring.reduce(c);
        if (cc != 0)
            r.words_.emplace(ls, std::move(cc));
    }
    return r;
}

std::optional<Element::Bidegree> Element::bidegree(const GenTable& tab) const {
    std::optional<Bidegree> deg;
    for (const auto& [ls, c] : words_) {
        Bidegree d;
        for (GenId g : ls) {
            d.res += tab[g].res_degree;
            d.internal += tab[g].int_degree;
        }
        if (!deg)
            deg = d;
        else if (!(*deg == d))
            throw error("element is not bidegree-homogeneous");
    }
    return deg;
}

bool Element::is_homogeneous(const GenTable& tab) const {
    try {
        bidegree(tab);
        return true;
    } catch (const error&) {
        return false;
    }
}

bool Element::is_decomposable(const GenTable& tab, int p) const {
    for (const auto& [ls, c] : words_) {
        if (c % p == 0)
            continue;
        if (ls.size() >= 2)
            continue;
        if (ls.size() == 1 && tab[ls[0]].decomposable_hint)
            continue;
        return false; // unit or a primitive single letter with unit coefficient
    }
    return true;
}

Element Element::linear_part() const {
    Element r;
    for (const auto& [ls, c] : words_)
        if (ls.size() == 1)
            r.words_.emplace(ls, c);
    return r;
}

bool Element::any_letter(const std::function<bool(GenId)>& pred) const {
    for (const auto& [ls, c] : words_)
        for (GenId g : ls)
            if (pred(g))
                return true;
    return false;
}

std::string Element::str(const GenTable& tab) const {
    if (words_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [ls, c] : words_) {
        if (!first)
            os << (c > 0 ? " + " : " - ");
        else if (c < 0)
            os << "-";
        first = false;
        Int a = c < 0 ? Int(-c) : c;
        bool printed = false;
        if (a != 1 || ls.empty()) {
            os << a.str();
            printed = true;
        }
        for (GenId g : ls) {
            if (printed)
                os << "*";
            os << tab[g].id;
            printed = true;
        }
    }
    return os.str();
}

const Element& RuleSet::get(GenId g) const {
    auto it = rules_.find(g);
    if (it == rules_.end())
        throw error("unresolved generator in rule set: #" + std::to_string(g));
    return it->second;
}

Element RuleSet::apply(const Element& e, const GenTable& tab) const {
    Element out;
    for (const auto& [ls, c] : e.words()) {
        int prefix_deg = 0;
        for (size_t i = 0; i < ls.size(); ++i) {
            auto it = rules_.find(ls[i]);
            if (it == rules_.end())
                throw error("unresolved generator: " + tab[ls[i]].id);
            const Element& dg = it->second;
            if (!dg.is_zero()) {
                Int sign = (prefix_deg % 2 == 0) ? 1 : -1;
                Element left = Element::word(Letters(ls.begin(), ls.begin() + i), c * sign);
                Element right = Element::word(Letters(ls.begin() + i + 1, ls.end()), 1);
                out += left * dg * right;
            }
            prefix_deg += tab[ls[i]].total_degree();
        }
    }
    return out;
}

std::optional<Element> RuleSet::try_apply(const Element& e, const GenTable& tab) const {
    for (const auto& [ls, c] : e.words())
        for (GenId g : ls)
            if (!rules_.count(g))
                return std::nullopt;
    return apply(e, tab);
}

} // namespace hirsch
