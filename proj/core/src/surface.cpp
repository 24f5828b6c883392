#include "bordcalc/surface.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bordcalc {

namespace {

struct UnionFind {
  std::vector<int> parent;
  int make() {
    parent.push_back(static_cast<int>(parent.size()));
    return static_cast<int>(parent.size()) - 1;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

// Strand labels over one slice: labels[j][k] = strand id of sheet k over
// column j.
using Labels = std::vector<std::vector<int>>;

struct ElbowInstance {
  int t;       // slice
  int event;   // event index in that slice
};

struct Builder {
  const PlanarDiagram& p;
  std::vector<LinearDiagram> slices;

  UnionFind verts;
  std::map<std::tuple<int, int, int, int>, int> vertex_key;  // (t, event, side, sheet)
  std::map<std::tuple<int, int, int>, int> wall_key;         // (t, side, sheet)

  UnionFind faces;  // nodes created per (interval, strand label)
  std::vector<std::map<int, int>> face_of_label;  // per interval: label -> face node

  struct EdgeRec {
    int v1, v2;
    int f1 = -1, f2 = -1;  // -1: boundary side
  };
  std::vector<EdgeRec> edge_list;

  // Fold arcs: union-find over elbow instances.
  UnionFind arcs;
  std::map<std::pair<int, int>, int> arc_key;  // (t, event) -> arc node
  std::map<int, int> arc_cd;                   // arc root -> crossing degree (accumulated later)
  std::map<int, int> arc_face;                 // arc node -> an adjacent face node

  // Twist arcs: union-find over twist event instances.
  UnionFind twists;
  std::map<std::pair<int, int>, int> twist_key;
  std::map<int, int> twist_face;

  explicit Builder(const PlanarDiagram& diagram) : p(diagram) {}

  int vertex(int t, int event, int side, int sheet) {
    auto key = std::make_tuple(t, event, side, sheet);
    auto it = vertex_key.find(key);
    if (it != vertex_key.end()) return it->second;
    const int id = verts.make();
    vertex_key.emplace(key, id);
    return id;
  }
  int wall_vertex(int t, int side, int sheet) {
    auto key = std::make_tuple(t, side, sheet);
    auto it = wall_key.find(key);
    if (it != wall_key.end()) return it->second;
    const int id = verts.make();
    wall_key.emplace(key, id);
    return id;
  }
  int face_node(int interval, int label) {
    auto& m = face_of_label[interval];
    auto it = m.find(label);
    if (it != m.end()) return it->second;
    const int id = faces.make();
    m.emplace(label, id);
    return id;
  }
  int arc_node(int t, int event) {
    auto key = std::make_pair(t, event);
    auto it = arc_key.find(key);
    if (it != arc_key.end()) return it->second;
    const int id = arcs.make();
    arc_key.emplace(key, id);
    return id;
  }
  int twist_node(int t, int event) {
    auto key = std::make_pair(t, event);
    auto it = twist_key.find(key);
    if (it != twist_key.end()) return it->second;
    const int id = twists.make();
    twist_key.emplace(key, id);
    return id;
  }

  // Per-slice vertex identifications along event bijections.
  void weld_slice(int t) {
    const LinearDiagram& L = slices[t];
    SheetWord word = L.domain;
    for (int i = 0; i < static_cast<int>(L.events.size()); ++i) {
      const LinearEvent& e = L.events[i];
      const int o = e.offset;
      const int n = static_cast<int>(word.size());
      switch (e.kind) {
        case EventKind::ElbowRight:
          verts.join(vertex(t, i, 0, o), vertex(t, i, 0, o + 1));
          for (int k = 0; k < o; ++k) verts.join(vertex(t, i, 0, k), vertex(t, i, 1, k));
          for (int k = o + 2; k < n; ++k) verts.join(vertex(t, i, 0, k), vertex(t, i, 1, k - 2));
          break;
        case EventKind::ElbowLeft:
          verts.join(vertex(t, i, 1, o), vertex(t, i, 1, o + 1));
          for (int k = 0; k < o; ++k) verts.join(vertex(t, i, 0, k), vertex(t, i, 1, k));
          for (int k = o; k < n; ++k) verts.join(vertex(t, i, 0, k), vertex(t, i, 1, k + 2));
          break;
        case EventKind::Twist:
          for (int k = 0; k < n; ++k) verts.join(vertex(t, i, 0, k), vertex(t, i, 1, k));
          break;
        case EventKind::Swap:
          verts.join(vertex(t, i, 0, o), vertex(t, i, 1, o + 1));
          verts.join(vertex(t, i, 0, o + 1), vertex(t, i, 1, o));
          for (int k = 0; k < n; ++k)
            if (k != o && k != o + 1) verts.join(vertex(t, i, 0, k), vertex(t, i, 1, k));
          break;
      }
      apply_event(word, e);
    }
  }

  // Computes strand labels along a slice. `created` records, per event
  // index, the pair of labels an ElbowLeft created; `reuse` supplies those
  // pairs for events matched to the other side of the interval.
  Labels trace_labels(const LinearDiagram& L, int& next_label,
                      const std::map<int, std::pair<int, int>>& reuse,
                      std::map<int, std::pair<int, int>>* created) {
    Labels labels;
    std::vector<int> cur(L.domain.size());
    for (std::size_t k = 0; k < cur.size(); ++k) cur[k] = static_cast<int>(k);
    // Domain labels are 0..d-1 in every interval so both slices agree.
    next_label = std::max<int>(next_label, static_cast<int>(cur.size()));
    labels.push_back(cur);
    for (int i = 0; i < static_cast<int>(L.events.size()); ++i) {
      const LinearEvent& e = L.events[i];
      const int o = e.offset;
      switch (e.kind) {
        case EventKind::ElbowRight:
          cur.erase(cur.begin() + o, cur.begin() + o + 2);
          break;
        case EventKind::ElbowLeft: {
          int a, b;
          auto it = reuse.find(i);
          if (it != reuse.end()) {
            a = it->second.first;
            b = it->second.second;
          } else {
            a = next_label++;
            b = next_label++;
          }
          if (created) created->emplace(i, std::make_pair(a, b));
          cur.insert(cur.begin() + o, {a, b});
          break;
        }
        case EventKind::Swap:
          std::swap(cur[o], cur[o + 1]);
          break;
        case EventKind::Twist:
          break;
      }
      labels.push_back(cur);
    }
    return labels;
  }
};

bool is_singular(Gen g) { return is_morse(g) || is_cusp(g); }

}  // namespace

Expected<CellComplex> reconstruct(const PlanarDiagram& p) {
  auto target = validate_planar(p);
  if (!target) return target.error();

  Builder b(p);
  b.slices.push_back(p.source);
  {
    LinearDiagram cell = p.source;
    for (const SliceStep& s : p.steps) {
      apply_slice_step(cell, s);
      b.slices.push_back(cell);
    }
  }
  // A stepless diagram still sweeps its 1-cell over one product interval.
  std::vector<std::optional<SliceStep>> interval_steps;
  if (p.steps.empty()) {
    b.slices.push_back(p.source);
    interval_steps.push_back(std::nullopt);
  } else {
    for (const SliceStep& s : p.steps) interval_steps.push_back(s);
  }
  const int n_intervals = static_cast<int>(interval_steps.size());
  b.face_of_label.resize(n_intervals);

  for (int t = 0; t <= n_intervals; ++t) b.weld_slice(t);

  struct IntervalData {
    Labels top, bottom;
    // (top event, bottom event) pairs for events persisting through.
    std::vector<std::pair<int, int>> matched;
    bool singular = false;
    int vstar = -1;
  };
  std::vector<IntervalData> ivals(n_intervals);

  for (int t = 0; t < n_intervals; ++t) {
    const LinearDiagram& top = b.slices[t];
    const LinearDiagram& bottom = b.slices[t + 1];
    IntervalData& iv = ivals[t];

    // Event matching across the interval.
    std::size_t win_top_lo = top.events.size(), win_top_len = 0, win_bot_len = 0;
    std::vector<std::pair<int, int>> window_matches;  // inside the window
    if (interval_steps[t]) {
      const SliceStep& s = *interval_steps[t];
      switch (s.kind) {
        case SliceStep::Kind::Apply: {
          const Generator2Cell& g = generator(s.gen);
          win_top_lo = s.at;
          win_top_len = g.source.size();
          win_bot_len = g.target.size();
          iv.singular = is_singular(s.gen);
          if (!iv.singular) {
            // Crossing generators keep their elbow and twist in place.
            for (std::size_t i = 0; i < std::min(win_top_len, win_bot_len); ++i)
              window_matches.emplace_back(static_cast<int>(s.at + i),
                                          static_cast<int>(s.at + i));
          }
          break;
        }
        case SliceStep::Kind::Interchange:
          win_top_lo = s.at;
          win_top_len = win_bot_len = 2;
          window_matches.emplace_back(static_cast<int>(s.at), static_cast<int>(s.at) + 1);
          window_matches.emplace_back(static_cast<int>(s.at) + 1, static_cast<int>(s.at));
          break;
        case SliceStep::Kind::SymSlide:
          switch (s.op) {
            case SlideOp::TwistAcross:
              win_top_lo = s.at;
              win_top_len = win_bot_len = 2;
              window_matches.emplace_back(static_cast<int>(s.at), static_cast<int>(s.at) + 1);
              window_matches.emplace_back(static_cast<int>(s.at) + 1, static_cast<int>(s.at));
              break;
            case SlideOp::CancelPair:
              win_top_lo = s.at;
              win_top_len = 2;
              win_bot_len = 0;
              break;
            case SlideOp::CreatePair:
              win_top_lo = s.at;
              win_top_len = 0;
              win_bot_len = 2;
              break;
            case SlideOp::BraidLeft:
            case SlideOp::BraidRight:
              win_top_lo = s.at;
              win_top_len = win_bot_len = 3;
              // Swap triples carry no surface structure; match positionally.
              for (int i = 0; i < 3; ++i)
                window_matches.emplace_back(static_cast<int>(s.at) + i,
                                            static_cast<int>(s.at) + i);
              break;
          }
          break;
      }
    } else {
      win_top_lo = top.events.size();
    }

    for (std::size_t i = 0; i < win_top_lo; ++i)
      iv.matched.emplace_back(static_cast<int>(i), static_cast<int>(i));
    iv.matched.insert(iv.matched.end(), window_matches.begin(), window_matches.end());
    const int shift = static_cast<int>(win_bot_len) - static_cast<int>(win_top_len);
    for (std::size_t i = win_top_lo + win_top_len; i < top.events.size(); ++i)
      iv.matched.emplace_back(static_cast<int>(i), static_cast<int>(i) + shift);

    // Labels: top first (recording created pairs), then bottom reusing the
    // pairs of matched ElbowLeft events.
    int next_label = 0;
    std::map<int, std::pair<int, int>> top_created;
    iv.top = b.trace_labels(top, next_label, {}, &top_created);
    std::map<int, std::pair<int, int>> bottom_reuse;
    for (const auto& [ti, bi] : iv.matched) {
      auto it = top_created.find(ti);
      if (it != top_created.end()) bottom_reuse.emplace(bi, it->second);
    }
    iv.bottom = b.trace_labels(bottom, next_label, bottom_reuse, nullptr);

    // Face nodes exist implicitly via face_node(). Singular steps pinch the
    // window: the strands flanking it merge around the singular vertex.
    if (iv.singular) {
      iv.vstar = b.verts.make();
      const std::size_t bcol = win_top_lo + win_bot_len;
      const std::size_t tcol = win_top_lo + win_top_len;
      const auto& tl = iv.top[tcol];
      const auto& bl = iv.bottom[bcol];
      for (std::size_t k = 0; k < tl.size(); ++k)
        b.faces.join(b.face_node(t, tl[k]), b.face_node(t, bl[k]));
      const auto& tl0 = iv.top[win_top_lo];
      const auto& bl0 = iv.bottom[win_top_lo];
      for (std::size_t k = 0; k < tl0.size(); ++k)
        b.faces.join(b.face_node(t, tl0[k]), b.face_node(t, bl0[k]));
    }
  }

  // Fold and twist arc welding plus crossing-degree contributions.
  for (int t = 0; t < n_intervals; ++t) {
    const IntervalData& iv = ivals[t];
    const LinearDiagram& top = b.slices[t];
    const LinearDiagram& bottom = b.slices[t + 1];
    for (const auto& [ti, bi] : iv.matched) {
      const LinearEvent& e = top.events[ti];
      if (e.kind == EventKind::ElbowLeft || e.kind == EventKind::ElbowRight)
        b.arcs.join(b.arc_node(t, ti), b.arc_node(t + 1, bi));
      if (e.kind == EventKind::Twist)
        b.twists.join(b.twist_node(t, ti), b.twist_node(t + 1, bi));
    }
    if (!interval_steps[t] || interval_steps[t]->kind != SliceStep::Kind::Apply) continue;
    const SliceStep& s = *interval_steps[t];
    const Generator2Cell& g = generator(s.gen);
    if (is_singular(s.gen)) {
      // The at most two pattern elbows join through the singular point.
      std::vector<std::pair<int, int>> elbows;  // (slice, event)
      for (std::size_t i = 0; i < g.source.size(); ++i)
        if (g.source[i].kind == EventKind::ElbowLeft || g.source[i].kind == EventKind::ElbowRight)
          elbows.emplace_back(t, static_cast<int>(s.at + i));
      for (std::size_t i = 0; i < g.target.size(); ++i)
        if (g.target[i].kind == EventKind::ElbowLeft || g.target[i].kind == EventKind::ElbowRight)
          elbows.emplace_back(t + 1, static_cast<int>(s.at + i));
      for (std::size_t i = 1; i < elbows.size(); ++i)
        b.arcs.join(b.arc_node(elbows[0].first, elbows[0].second),
                    b.arc_node(elbows[i].first, elbows[i].second));
    } else if (generator(s.gen).crossing_sign != 0) {
      // The crossing sits on the arc of the window's elbow event.
      for (std::size_t i = 0; i < g.source.size(); ++i) {
        if (g.source[i].kind != EventKind::ElbowLeft && g.source[i].kind != EventKind::ElbowRight)
          continue;
        const int node = b.arc_node(t, static_cast<int>(s.at + i));
        b.arc_cd[node] += g.crossing_sign;  // re-accumulated on roots later
      }
    } else if (is_twist_homotopy(s.gen)) {
      // Birth or death joins the two twist arcs of the pattern.
      if (g.source.size() == 2)
        b.twists.join(b.twist_node(t, static_cast<int>(s.at)),
                      b.twist_node(t, static_cast<int>(s.at + 1)));
      else
        b.twists.join(b.twist_node(t + 1, static_cast<int>(s.at)),
                      b.twist_node(t + 1, static_cast<int>(s.at + 1)));
    }
  }

  // Edges.
  auto face_above = [&](int t, std::size_t j, int k) -> int {
    if (t == 0) return -1;
    return b.faces.find(b.face_node(t - 1, ivals[t - 1].bottom[j][k]));
  };
  auto face_below = [&](int t, std::size_t j, int k) -> int {
    if (t == n_intervals) return -1;
    return b.faces.find(b.face_node(t, ivals[t].top[j][k]));
  };

  for (int t = 0; t <= n_intervals; ++t) {
    const LinearDiagram& L = b.slices[t];
    SheetWord word = L.domain;
    const int m = static_cast<int>(L.events.size());
    for (int j = 0; j <= m; ++j) {
      const int width = static_cast<int>(word.size());
      for (int k = 0; k < width; ++k) {
        Builder::EdgeRec e;
        e.v1 = j == 0 ? b.wall_vertex(t, 0, k) : b.verts.find(b.vertex(t, j - 1, 1, k));
        e.v2 = j == m ? b.wall_vertex(t, 1, k) : b.verts.find(b.vertex(t, j, 0, k));
        e.f1 = face_above(t, j, k);
        e.f2 = face_below(t, j, k);
        b.edge_list.push_back(e);
      }
      if (j < m) apply_event(word, L.events[j]);
    }
  }

  // Fold edges: one per persisting elbow per interval, plus pattern elbows
  // attached to the singular vertex.
  auto elbow_vertex = [&](int t, int i) {
    const LinearEvent& e = b.slices[t].events[i];
    const int side = e.kind == EventKind::ElbowRight ? 0 : 1;
    return b.verts.find(b.vertex(t, i, side, e.offset));
  };
  auto elbow_faces = [&](int t, int i, const Labels& labels) {
    const LinearEvent& e = b.slices[t].events[i];
    const std::size_t col = e.kind == EventKind::ElbowRight ? i : i + 1;
    return std::make_pair(labels[col][e.offset], labels[col][e.offset + 1]);
  };
  for (int t = 0; t < n_intervals; ++t) {
    const IntervalData& iv = ivals[t];
    for (const auto& [ti, bi] : iv.matched) {
      const LinearEvent& e = b.slices[t].events[ti];
      if (e.kind != EventKind::ElbowLeft && e.kind != EventKind::ElbowRight) continue;
      auto [la, lb] = elbow_faces(t, ti, iv.top);
      Builder::EdgeRec rec;
      rec.v1 = elbow_vertex(t, ti);
      rec.v2 = elbow_vertex(t + 1, bi);
      rec.f1 = b.faces.find(b.face_node(t, la));
      rec.f2 = b.faces.find(b.face_node(t, lb));
      b.edge_list.push_back(rec);
      b.arc_face[b.arcs.find(b.arc_node(t, ti))] = rec.f1;
    }
    if (!iv.singular) continue;
    const SliceStep& s = *interval_steps[t];
    const Generator2Cell& g = generator(s.gen);
    for (std::size_t i = 0; i < g.source.size(); ++i) {
      const int ev = static_cast<int>(s.at + i);
      if (g.source[i].kind == EventKind::ElbowLeft || g.source[i].kind == EventKind::ElbowRight) {
        auto [la, lb] = elbow_faces(t, ev, iv.top);
        Builder::EdgeRec rec;
        rec.v1 = elbow_vertex(t, ev);
        rec.v2 = iv.vstar;
        rec.f1 = b.faces.find(b.face_node(t, la));
        rec.f2 = b.faces.find(b.face_node(t, lb));
        b.edge_list.push_back(rec);
        b.arc_face[b.arcs.find(b.arc_node(t, ev))] = rec.f1;
      }
    }
    for (std::size_t i = 0; i < g.target.size(); ++i) {
      const int ev = static_cast<int>(s.at + i);
      const LinearEvent& te = b.slices[t + 1].events[ev];
      if (te.kind == EventKind::ElbowLeft || te.kind == EventKind::ElbowRight) {
        const std::size_t col = te.kind == EventKind::ElbowRight ? ev : ev + 1;
        const int la = iv.bottom[col][te.offset];
        const int lb = iv.bottom[col][te.offset + 1];
        Builder::EdgeRec rec;
        rec.v1 = iv.vstar;
        rec.v2 = elbow_vertex(t + 1, ev);
        rec.f1 = b.faces.find(b.face_node(t, la));
        rec.f2 = b.faces.find(b.face_node(t, lb));
        b.edge_list.push_back(rec);
        b.arc_face[b.arcs.find(b.arc_node(t + 1, ev))] = rec.f1;
      }
    }
  }

  // Wall edges along the vertical boundary.
  for (int t = 0; t < n_intervals; ++t) {
    const int dwidth = static_cast<int>(b.slices[t].domain.size());
    for (int k = 0; k < dwidth; ++k) {
      Builder::EdgeRec rec;
      rec.v1 = b.wall_vertex(t, 0, k);
      rec.v2 = b.wall_vertex(t + 1, 0, k);
      rec.f1 = b.faces.find(b.face_node(t, ivals[t].top[0][k]));
      b.edge_list.push_back(rec);
    }
    auto cod = validate_linear(b.slices[t]);
    const int cwidth = cod ? static_cast<int>(cod.value().size()) : 0;
    const std::size_t last = b.slices[t].events.size();
    for (int k = 0; k < cwidth; ++k) {
      Builder::EdgeRec rec;
      rec.v1 = b.wall_vertex(t, 1, k);
      rec.v2 = b.wall_vertex(t + 1, 1, k);
      rec.f1 = b.faces.find(b.face_node(t, ivals[t].top[last][k]));
      b.edge_list.push_back(rec);
    }
  }

  // Twist marks: note each twist instance's face for component charging.
  for (int t = 0; t <= n_intervals; ++t) {
    const LinearDiagram& L = b.slices[t];
    for (int i = 0; i < static_cast<int>(L.events.size()); ++i) {
      if (L.events[i].kind != EventKind::Twist) continue;
      const int node = b.twist_node(t, i);
      const int interval = t < n_intervals ? t : t - 1;
      const Labels& labels = t < n_intervals ? ivals[t].top : ivals[t - 1].bottom;
      b.twist_face[node] = b.faces.find(b.face_node(interval, labels[i][L.events[i].offset]));
    }
  }

  // Assemble counts per component.
  std::map<int, int> face_comp;  // face root -> component id (via edge gluing)
  UnionFind comp_uf;
  std::map<int, int> comp_node_of_face;
  auto comp_node = [&](int face_root) {
    auto it = comp_node_of_face.find(face_root);
    if (it != comp_node_of_face.end()) return it->second;
    const int id = comp_uf.make();
    comp_node_of_face.emplace(face_root, id);
    return id;
  };
  for (int i = 0; i < static_cast<int>(b.faces.parent.size()); ++i)
    if (b.faces.find(i) == i) comp_node(i);
  for (const auto& e : b.edge_list)
    if (e.f1 >= 0 && e.f2 >= 0) comp_uf.join(comp_node(b.faces.find(e.f1)), comp_node(b.faces.find(e.f2)));

  std::map<int, int> comp_ids;  // comp root -> dense id
  auto comp_of_face = [&](int face) {
    const int root = comp_uf.find(comp_node(b.faces.find(face)));
    auto it = comp_ids.find(root);
    if (it != comp_ids.end()) return it->second;
    const int id = static_cast<int>(comp_ids.size());
    comp_ids.emplace(root, id);
    return id;
  };

  CellComplex out;
  // Faces per component.
  std::map<int, int> fcount, ecount, vcount, bedges;
  std::map<int, std::set<int>> comp_vertices;
  std::map<int, int> vertex_comp;  // vertex root -> component
  for (int i = 0; i < static_cast<int>(b.faces.parent.size()); ++i) {
    if (b.faces.find(i) != i) continue;
    fcount[comp_of_face(i)]++;
    out.faces++;
  }
  for (const auto& e : b.edge_list) {
    const int face = e.f1 >= 0 ? e.f1 : e.f2;
    const int c = comp_of_face(face);
    ecount[c]++;
    out.edges++;
    comp_vertices[c].insert(b.verts.find(e.v1));
    comp_vertices[c].insert(b.verts.find(e.v2));
    vertex_comp[b.verts.find(e.v1)] = c;
    vertex_comp[b.verts.find(e.v2)] = c;
    if (e.f1 < 0 || e.f2 < 0) {
      bedges[c]++;
      out.boundary_edges++;
    }
  }
  for (auto& [c, vs] : comp_vertices) vcount[c] = static_cast<int>(vs.size());
  out.vertices = 0;
  for (auto& [c, count] : vcount) out.vertices += count;

  const int ncomp = static_cast<int>(comp_ids.size());
  out.components = ncomp;
  out.component_euler.assign(ncomp, 0);
  out.component_boundary_circles.assign(ncomp, 0);
  out.component_closed.assign(ncomp, true);
  out.component_total_twist.assign(ncomp, 0);
  for (int c = 0; c < ncomp; ++c)
    out.component_euler[c] = vcount[c] - ecount[c] + fcount[c];

  // Boundary circles: cycles in the graph of boundary edges.
  {
    std::map<int, std::vector<int>> adj;  // vertex root -> boundary edge ids
    std::vector<const Builder::EdgeRec*> bedge_ptrs;
    for (const auto& e : b.edge_list) {
      if (e.f1 >= 0 && e.f2 >= 0) continue;
      const int id = static_cast<int>(bedge_ptrs.size());
      bedge_ptrs.push_back(&e);
      adj[b.verts.find(e.v1)].push_back(id);
      adj[b.verts.find(e.v2)].push_back(id);
    }
    std::vector<bool> used(bedge_ptrs.size(), false);
    for (std::size_t start = 0; start < bedge_ptrs.size(); ++start) {
      if (used[start]) continue;
      // Trace the cycle through degree-two boundary vertices.
      const int comp = comp_of_face(bedge_ptrs[start]->f1 >= 0 ? bedge_ptrs[start]->f1
                                                               : bedge_ptrs[start]->f2);
      out.component_boundary_circles[comp]++;
      out.component_closed[comp] = false;
      std::vector<std::size_t> stack{start};
      used[start] = true;
      while (!stack.empty()) {
        const std::size_t cur = stack.back();
        stack.pop_back();
        for (int v : {b.verts.find(bedge_ptrs[cur]->v1), b.verts.find(bedge_ptrs[cur]->v2)}) {
          for (int other : adj[v]) {
            if (!used[other]) {
              used[other] = true;
              stack.push_back(other);
            }
          }
        }
      }
    }
  }

  // Twist arcs: one charge per maximal arc, by the direction at its
  // earliest instance.
  {
    std::map<int, std::pair<int, int>> earliest;  // arc root -> (t, event)
    for (const auto& [key, node] : b.twist_key) {
      const int root = b.twists.find(node);
      auto it = earliest.find(root);
      if (it == earliest.end() || key < it->second) earliest[root] = key;
    }
    for (const auto& [root, key] : earliest) {
      const LinearEvent& e = b.slices[key.first].events[key.second];
      const int sign = e.dir == TwistDir::Straightforward ? 1 : -1;
      auto fit = b.twist_face.find(b.twist_key.at(key));
      if (fit == b.twist_face.end()) continue;
      out.component_total_twist[comp_of_face(fit->second)] += sign;
    }
  }

  // Fold arcs with crossing degrees.
  {
    std::map<int, int> cd;
    for (const auto& [node, d] : b.arc_cd) cd[b.arcs.find(node)] += d;
    std::map<int, int> face_for;
    for (const auto& [node, f] : b.arc_face) face_for[b.arcs.find(node)] = f;
    for (const auto& [key, node] : b.arc_key) {
      const int root = b.arcs.find(node);
      if (root != node) continue;
      (void)key;
      CellComplex::FoldArc arc;
      arc.crossing_degree = cd.count(root) ? cd[root] : 0;
      arc.component = face_for.count(root) ? comp_of_face(face_for[root]) : 0;
      out.fold_arcs.push_back(arc);
    }
  }

  return out;
}

Expected<SurfaceReport> surface_invariants(const PlanarDiagram& p) {
  auto complex = reconstruct(p);
  if (!complex) return complex.error();
  const CellComplex& c = complex.value();
  SurfaceReport report;
  for (std::size_t i = 0; i < c.components; ++i) {
    SurfaceComponent comp;
    comp.euler = c.component_euler[i];
    comp.boundary_components = c.component_boundary_circles[i];
    comp.closed = c.component_closed[i];
    comp.total_twist = c.component_total_twist[i];
    report.components.push_back(comp);
  }
  for (const auto& arc : c.fold_arcs) report.crossing_degrees.push_back(arc.crossing_degree);
  return report;
}

}  // namespace bordcalc
