#include "frz/complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace frz {

std::vector<SlotRef> IdealComplex::slots_of_arc(int arc) const {
    std::vector<SlotRef> out;
    for (int t = 0; t < int(tris.size()); ++t)
        for (int s = 0; s < 3; ++s)
            if (tris[t].arc[s] == arc) out.push_back({t, s});
    return out;
}

std::array<int, 2> IdealComplex::arc_endpoints(int arc) const {
    auto slots = slots_of_arc(arc);
    SlotRef s = slots.at(0);
    return {corner_at({s.tri, mod3(s.slot + 1)}), corner_at({s.tri, mod3(s.slot + 2)})};
}

bool IdealComplex::arc_is_sf_radius(int arc) const {
    auto slots = slots_of_arc(arc);
    return slots.size() == 2 && slots[0].tri == slots[1].tri;
}

int IdealComplex::sf_loop_of_radius(int arc) const {
    auto slots = slots_of_arc(arc);
    if (slots.size() != 2 || slots[0].tri != slots[1].tri)
        throw LogicError("sf_loop_of_radius: not a self-folded radius");
    int third = 3 - slots[0].slot - slots[1].slot;
    return tris[slots[0].tri].arc[third];
}

int IdealComplex::sf_puncture_of_radius(int arc) const {
    auto slots = slots_of_arc(arc);
    if (slots.size() != 2 || slots[0].tri != slots[1].tri)
        throw LogicError("sf_puncture_of_radius: not a self-folded radius");
    int third = 3 - slots[0].slot - slots[1].slot;
    return tris[slots[0].tri].corner[third];
}

bool IdealComplex::arc_is_sf_loop(int arc) const {
    for (SlotRef s : slots_of_arc(arc)) {
        const Tri& t = tris[s.tri];
        if (t.arc[mod3(s.slot + 1)] == t.arc[mod3(s.slot + 2)]) return true;
    }
    return false;
}

int IdealComplex::sf_radius_of_loop(int arc) const {
    for (SlotRef s : slots_of_arc(arc)) {
        const Tri& t = tris[s.tri];
        if (t.arc[mod3(s.slot + 1)] == t.arc[mod3(s.slot + 2)]) return t.arc[mod3(s.slot + 1)];
    }
    throw LogicError("sf_radius_of_loop: not a self-folded loop");
}

int IdealComplex::valence(int point) const {
    int n = 0;
    for (const Tri& t : tris)
        for (int c = 0; c < 3; ++c)
            if (t.corner[c] == point) ++n;
    return n;
}

IdealComplex complex_from_triangles(const std::vector<std::array<int, 3>>& corners,
                                    const std::vector<std::array<long long, 3>>& side_key) {
    if (corners.size() != side_key.size())
        throw LogicError("complex_from_triangles: table size mismatch");
    IdealComplex c;
    c.tris.resize(corners.size());
    std::map<long long, int> arc_of_key;
    std::map<long long, std::vector<SlotRef>> slots_of_key;
    for (int t = 0; t < int(corners.size()); ++t) {
        c.tris[t].corner = corners[t];
        for (int s = 0; s < 3; ++s) {
            long long k = side_key[t][s];
            if (!arc_of_key.count(k)) arc_of_key[k] = c.n_arcs++;
            c.tris[t].arc[s] = arc_of_key[k];
            slots_of_key[k].push_back({t, s});
        }
        c.n_points = std::max({c.n_points, corners[t][0] + 1, corners[t][1] + 1, corners[t][2] + 1});
    }
    for (const auto& [k, slots] : slots_of_key) {
        if (slots.size() == 1) continue;
        if (slots.size() != 2) throw DomainError("complex: edge key used more than twice");
        c.tris[slots[0].tri].glue[slots[0].slot] = slots[1];
        c.tris[slots[1].tri].glue[slots[1].slot] = slots[0];
    }
    return c;
}

void validate_complex(const IdealComplex& c) {
    const int T = int(c.tris.size());
    if (T == 0) throw DomainError("complex: no triangles");
    std::vector<int> arc_slots(c.n_arcs, 0);
    std::vector<bool> point_used(c.n_points, false);
    for (int t = 0; t < T; ++t) {
        const auto& tr = c.tris[t];
        for (int s = 0; s < 3; ++s) {
            if (tr.corner[s] < 0 || tr.corner[s] >= c.n_points)
                throw DomainError("complex: corner label out of range");
            point_used[tr.corner[s]] = true;
            if (tr.arc[s] < 0 || tr.arc[s] >= c.n_arcs)
                throw DomainError("complex: arc id out of range");
            ++arc_slots[tr.arc[s]];
            SlotRef g = tr.glue[s];
            if (!g.valid()) continue;
            if (g.tri < 0 || g.tri >= T || g.slot < 0 || g.slot > 2)
                throw DomainError("complex: gluing target out of range");
            if (g.tri == t && g.slot == s) throw DomainError("complex: slot glued to itself");
            if (c.glued(g) != SlotRef{t, s}) throw DomainError("complex: gluing is not an involution");
            if (c.arc_at(g) != tr.arc[s]) throw DomainError("complex: glued slots carry different arcs");
            if (tr.corner[mod3(s + 1)] != c.corner_at({g.tri, mod3(g.slot + 2)}) ||
                tr.corner[mod3(s + 2)] != c.corner_at({g.tri, mod3(g.slot + 1)}))
                throw DomainError("complex: corner labels disagree across a gluing");
        }
    }
    for (int a = 0; a < c.n_arcs; ++a) {
        if (arc_slots[a] == 0) throw DomainError("complex: unused arc id");
        if (arc_slots[a] > 2) throw DomainError("complex: arc with more than two slots");
        auto slots = c.slots_of_arc(a);
        if (slots.size() == 2) {
            if (!c.glued(slots[0]).valid() || c.glued(slots[0]) != slots[1])
                throw DomainError("complex: two-slot arc not glued to itself");
        } else if (c.glued(slots[0]).valid()) {
            throw DomainError("complex: one-slot arc is glued");
        }
    }
    for (bool u : point_used)
        if (!u) throw DomainError("complex: unused marked point id");
    // corner labels must be exactly the orbits of the corner identifications
    std::vector<int> uf(3 * T);
    for (int i = 0; i < 3 * T; ++i) uf[i] = i;
    std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
    auto unite = [&](int x, int y) { uf[find(x)] = find(y); };
    for (int t = 0; t < T; ++t)
        for (int s = 0; s < 3; ++s) {
            SlotRef g = c.tris[t].glue[s];
            if (!g.valid()) continue;
            unite(3 * t + mod3(s + 1), 3 * g.tri + mod3(g.slot + 2));
            unite(3 * t + mod3(s + 2), 3 * g.tri + mod3(g.slot + 1));
        }
    std::set<int> orbit_roots;
    for (int i = 0; i < 3 * T; ++i) orbit_roots.insert(find(i));
    if (int(orbit_roots.size()) != c.n_points)
        throw DomainError("complex: corner labels do not match the glued corner classes");
    // connectivity over triangle adjacency
    std::vector<bool> seen(T, false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int s = 0; s < 3; ++s) {
            SlotRef g = c.tris[t].glue[s];
            if (g.valid() && !seen[g.tri]) {
                seen[g.tri] = true;
                stack.push_back(g.tri);
            }
        }
    }
    for (bool u : seen)
        if (!u) throw DomainError("complex: not connected");
}

std::vector<bool> boundary_point_mask(const IdealComplex& c) {
    std::vector<bool> mask(c.n_points, false);
    for (int t = 0; t < int(c.tris.size()); ++t)
        for (int s = 0; s < 3; ++s)
            if (!c.tris[t].glue[s].valid()) {
                mask[c.corner_at({t, mod3(s + 1)})] = true;
                mask[c.corner_at({t, mod3(s + 2)})] = true;
            }
    return mask;
}

namespace {

// next boundary side when walking with the surface on the left
SlotRef next_boundary_slot(const IdealComplex& c, SlotRef e) {
    int t = e.tri, a = mod3(e.slot + 1);
    while (true) {
        SlotRef g = c.tris[t].glue[a];
        if (!g.valid()) return {t, a};
        t = g.tri;
        a = mod3(g.slot + 1);
    }
}

}  // namespace

MarkedSurface derive_surface(const IdealComplex& c) {
    validate_complex(c);
    std::map<SlotRef, bool> visited;
    for (int t = 0; t < int(c.tris.size()); ++t)
        for (int s = 0; s < 3; ++s)
            if (!c.tris[t].glue[s].valid()) visited[{t, s}] = false;
    MarkedSurface out;
    for (auto& [start, seen] : visited) {
        if (seen) continue;
        int len = 0;
        SlotRef e = start;
        do {
            visited[e] = true;
            ++len;
            e = next_boundary_slot(c, e);
        } while (e != start);
        out.boundary_marked.push_back(len);
    }
    std::sort(out.boundary_marked.rbegin(), out.boundary_marked.rend());
    auto mask = boundary_point_mask(c);
    int boundary_points = int(std::count(mask.begin(), mask.end(), true));
    out.punctures = c.n_points - boundary_points;
    int chi = c.n_points - c.n_arcs + int(c.tris.size());
    int b = int(out.boundary_marked.size());
    int twice_genus = 2 - b - chi;
    if (twice_genus < 0 || twice_genus % 2 != 0)
        throw DomainError("complex: inconsistent Euler characteristic");
    out.genus = twice_genus / 2;
    return out;
}

std::string canonical_encoding(const IdealComplex& c, const std::vector<std::string>& arc_payload) {
    const int T = int(c.tris.size());
    auto payload = [&](int arc) -> std::string {
        return arc < int(arc_payload.size()) ? arc_payload[arc] : std::string();
    };
    std::string best;
    for (int root = 0; root < T; ++root)
        for (int rot0 = 0; rot0 < 3; ++rot0) {
            std::vector<int> idx_of(T, -1), rot_of(T, 0), order;
            order.reserve(T);
            idx_of[root] = 0;
            rot_of[root] = rot0;
            order.push_back(root);
            for (size_t head = 0; head < order.size(); ++head) {
                int t = order[head];
                for (int es = 0; es < 3; ++es) {
                    SlotRef g = c.tris[t].glue[mod3(es + rot_of[t])];
                    if (g.valid() && idx_of[g.tri] < 0) {
                        idx_of[g.tri] = int(order.size());
                        rot_of[g.tri] = g.slot;  // entry slot encodes as 0
                        order.push_back(g.tri);
                    }
                }
            }
            if (int(order.size()) != T) continue;  // complex validated connected anyway
            std::ostringstream os;
            for (int i = 0; i < T; ++i) {
                int t = order[i];
                for (int es = 0; es < 3; ++es) {
                    int s = mod3(es + rot_of[t]);
                    SlotRef g = c.tris[t].glue[s];
                    os << 'c' << c.tris[t].corner[s] << 'a' << payload(c.tris[t].arc[s]);
                    if (!g.valid()) os << "b;";
                    else os << 'g' << idx_of[g.tri] << '.' << mod3(g.slot - rot_of[g.tri]) << ';';
                }
                os << '|';
            }
            std::string enc = os.str();
            if (best.empty() || enc < best) best = enc;
        }
    return best;
}

}  // namespace frz
