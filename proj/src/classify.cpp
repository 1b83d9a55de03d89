#include "pdp/classify.hpp"

#include <algorithm>
#include <map>

namespace pdp {

MsfDescriptor msf(const Scenario& s, const InputCollection& coll) {
    coll.validate(s);
    const InputCollection comp = complement(s, coll);
    std::vector<std::uint32_t> frag(s.party_count(), 0);
    std::size_t rich = 0;
    for (std::size_t i = 0; i < s.party_count(); ++i) {
        if (comp.count(i) >= 2) {
            frag[i] = comp.mask(i);
            ++rich;
        }
    }
    MsfDescriptor d;
    d.bottom = rich <= 1;
    if (!d.bottom) d.fragment = InputCollection(std::move(frag));
    return d;
}

Relation compare(const Scenario& s, const InputCollection& a, const InputCollection& b) {
    const MsfDescriptor ma = msf(s, a);
    const MsfDescriptor mb = msf(s, b);
    if (ma == mb) return Relation::Equal;
    if (ma.bottom) return Relation::Subset;    // Bell polytope inside a non-Bell PD
    if (mb.bottom) return Relation::Superset;
    if (ma.fragment.subset_of(mb.fragment)) return Relation::Subset;
    if (mb.fragment.subset_of(ma.fragment)) return Relation::Superset;
    return Relation::Incomparable;
}

bool is_bell(const Scenario& s, const InputCollection& coll) { return msf(s, coll).bottom; }

bool is_ns(const Scenario& s, const InputCollection& coll) {
    return msf(s, coll) == msf(s, InputCollection::empty(s));
}

ClassificationReport classify_all(const Scenario& s, std::size_t max_collections) {
    if (collection_count(s) > max_collections)
        throw BudgetExceeded("classification collection budget exceeded");

    struct Key {
        bool bottom;
        std::vector<std::uint32_t> frag;
        bool operator<(const Key& o) const {
            if (bottom != o.bottom) return bottom && !o.bottom;  // Bell class first
            return frag < o.frag;
        }
    };
    std::map<Key, PolytopeClass> groups;
    all_collections(s, /*include_trivial=*/true, [&](const InputCollection& coll) {
        const MsfDescriptor d = msf(s, coll);
        Key k{d.bottom, {}};
        if (!d.bottom)
            for (std::size_t i = 0; i < s.party_count(); ++i) k.frag.push_back(d.fragment.mask(i));
        auto [it, fresh] = groups.try_emplace(k);
        if (fresh) {
            it->second.msf = d;
            // The unique maximal collection of the class: everything except the
            // fragment inputs (the full collection for the Bell class).
            if (d.bottom) {
                it->second.representative = InputCollection::full(s);
            } else {
                std::vector<std::uint32_t> rep(s.party_count());
                for (std::size_t i = 0; i < s.party_count(); ++i)
                    rep[i] = ((1u << s.input_count(i)) - 1u) & ~d.fragment.mask(i);
                it->second.representative = InputCollection(std::move(rep));
            }
        }
        ++it->second.size;
    });

    ClassificationReport report;
    report.classes.reserve(groups.size());
    for (auto& [k, cls] : groups) report.classes.push_back(std::move(cls));
    const std::size_t n = report.classes.size();
    report.relations.assign(n, std::vector<Relation>(n, Relation::Equal));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            report.relations[i][j] =
                compare(s, report.classes[i].representative, report.classes[j].representative);
    return report;
}

}  // namespace pdp
