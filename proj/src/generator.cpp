#include "generator.hpp"

namespace hirsch {

GenId GenTable::intern(GenInfo info) {
    auto it = index_.find(info.id);
    if (it != index_.end())
        return it->second;
    GenId g = static_cast<GenId>(infos_.size());
    index_.emplace(info.id, g);
    infos_.push_back(std::move(info));
    return g;
}

GenId GenTable::find(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw error("unknown generator: " + id);
    return it->second;
}

} // namespace hirsch
