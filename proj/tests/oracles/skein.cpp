#include "oracles/skein.hpp"

#include <set>

namespace oracle {

using crofton::GaussEntry;
using crofton::Pass;

namespace {

void add_into(Conway& dst, const Conway& src, int shift, std::int64_t factor) {
    if (dst.size() < src.size() + shift) dst.resize(src.size() + shift, 0);
    for (std::size_t i = 0; i < src.size(); ++i) dst[i + shift] += factor * src[i];
}

struct Bad {
    int label = 0, sign = 0;
};

bool first_bad(const LinkCode& link, Bad& bad) {
    std::set<int> seen;
    for (const auto& comp : link)
        for (const auto& e : comp) {
            if (seen.insert(e.label).second && e.pass == Pass::under) {
                bad = {e.label, e.sign};
                return true;
            }
        }
    return false;
}

LinkCode switched(LinkCode link, int label) {
    for (auto& comp : link)
        for (auto& e : comp)
            if (e.label == label) {
                e.pass = e.pass == Pass::over ? Pass::under : Pass::over;
                e.sign = -e.sign;
            }
    return link;
}

LinkCode smoothed(const LinkCode& link, int label) {
    std::vector<std::pair<int, int>> at;
    for (int c = 0; c < static_cast<int>(link.size()); ++c)
        for (int i = 0; i < static_cast<int>(link[c].size()); ++i)
            if (link[c][i].label == label) at.push_back({c, i});
    LinkCode out;
    const auto [ca, ka] = at[0];
    const auto [cb, kb] = at[1];
    if (ca == cb) {
        const Component& x = link[ca];
        Component inner(x.begin() + ka + 1, x.begin() + kb);
        Component outer(x.begin() + kb + 1, x.end());
        outer.insert(outer.end(), x.begin(), x.begin() + ka);
        for (int c = 0; c < static_cast<int>(link.size()); ++c)
            if (c != ca) out.push_back(link[c]);
        out.push_back(inner);
        out.push_back(outer);
    } else {
        const Component& a = link[ca];
        const Component& b = link[cb];
        Component merged(a.begin(), a.begin() + ka);
        merged.insert(merged.end(), b.begin() + kb + 1, b.end());
        merged.insert(merged.end(), b.begin(), b.begin() + kb);
        merged.insert(merged.end(), a.begin() + ka + 1, a.end());
        for (int c = 0; c < static_cast<int>(link.size()); ++c)
            if (c != ca && c != cb) out.push_back(link[c]);
        out.push_back(merged);
    }
    return out;
}

}  // namespace

Conway conway(const LinkCode& link) {
    Bad bad;
    if (!first_bad(link, bad)) return link.size() == 1 ? Conway{1} : Conway{0};
    Conway out = conway(switched(link, bad.label));
    add_into(out, conway(smoothed(link, bad.label)), 1, bad.sign);
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

Conway conway(const crofton::KnotDiagram& k) { return conway(LinkCode{k.entries}); }

std::int64_t conway_coefficient(const Conway& p, int power) {
    return power < static_cast<int>(p.size()) ? p[power] : 0;
}

}  // namespace oracle
