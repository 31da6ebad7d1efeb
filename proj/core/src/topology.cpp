#include "nocforge/topology.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "nocforge/error.hpp"

namespace nocforge {

const char* to_string(TileKind kind) {
  switch (kind) {
    case TileKind::Cpu: return "cpu";
    case TileKind::GpuCluster: return "gpu";
    case TileKind::Mc: return "mc";
  }
  return "?";
}

TileKind tile_kind_from_string(const std::string& s) {
  if (s == "cpu") return TileKind::Cpu;
  if (s == "gpu") return TileKind::GpuCluster;
  if (s == "mc") return TileKind::Mc;
  throw ParseError("unknown tile kind '" + s + "'");
}

Placement::Placement(int rows, int cols, std::vector<TileKind> kinds)
    : rows_(rows), cols_(cols), kinds_(std::move(kinds)) {
  if (rows_ < 1 || cols_ < 1) throw ConfigError("placement grid must be at least 1x1");
  if (static_cast<int>(kinds_.size()) != rows_ * cols_) {
    throw ConfigError("placement covers " + std::to_string(kinds_.size()) + " tiles, grid has " +
                      std::to_string(rows_ * cols_));
  }
}

Placement Placement::uniform(int rows, int cols, TileKind kind) {
  return Placement(rows, cols, std::vector<TileKind>(static_cast<std::size_t>(rows) * cols, kind));
}

static void require_center_grid(int rows, int cols) {
  if (rows < 4 || cols < 4 || rows % 2 != 0 || cols % 2 != 0) {
    throw ConfigError("placement preset needs an even grid of at least 4x4, got " +
                      std::to_string(rows) + "x" + std::to_string(cols));
  }
}

Placement Placement::center_cluster(int rows, int cols) {
  require_center_grid(rows, cols);
  auto p = uniform(rows, cols, TileKind::GpuCluster);
  const int ra = rows / 2 - 1, rb = rows / 2;
  const int ca = cols / 2 - 1, cb = cols / 2;
  for (int r : {ra, rb})
    for (int c : {ca, cb}) p.kinds_[r * cols + c] = TileKind::Cpu;
  // MCs ring the CPU block: north, east, south, west of the block corners.
  p.kinds_[(ra - 1) * cols + ca] = TileKind::Mc;
  p.kinds_[ra * cols + (cb + 1)] = TileKind::Mc;
  p.kinds_[(rb + 1) * cols + cb] = TileKind::Mc;
  p.kinds_[rb * cols + (ca - 1)] = TileKind::Mc;
  return p;
}

Placement Placement::quadrant_mc(int rows, int cols) {
  require_center_grid(rows, cols);
  auto p = uniform(rows, cols, TileKind::GpuCluster);
  const int ra = rows / 2 - 1, rb = rows / 2;
  const int ca = cols / 2 - 1, cb = cols / 2;
  for (int r : {ra, rb})
    for (int c : {ca, cb}) p.kinds_[r * cols + c] = TileKind::Cpu;
  const int qr = rows / 4, qc = cols / 4;
  p.kinds_[(qr - 1) * cols + (qc - 1)] = TileKind::Mc;
  p.kinds_[(qr - 1) * cols + (cols - qc)] = TileKind::Mc;
  p.kinds_[(rows - qr) * cols + (qc - 1)] = TileKind::Mc;
  p.kinds_[(rows - qr) * cols + (cols - qc)] = TileKind::Mc;
  return p;
}

std::vector<int> Placement::routers_of(TileKind kind) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (kinds_[static_cast<std::size_t>(i)] == kind) out.push_back(i);
  return out;
}

int Placement::count(TileKind kind) const {
  return static_cast<int>(std::count(kinds_.begin(), kinds_.end(), kind));
}

Topology::Topology(int rows, int cols, std::vector<Router> routers, std::vector<Link> links,
                   std::optional<WirelessPlan> wireless)
    : rows_(rows),
      cols_(cols),
      routers_(std::move(routers)),
      links_(std::move(links)),
      wireless_(std::move(wireless)) {
  if (static_cast<int>(routers_.size()) != rows_ * cols_) {
    throw ConfigError("router count does not match grid");
  }
  out_links_.assign(routers_.size(), {});
  for (const Link& l : links_) {
    if (l.src < 0 || l.src >= router_count() || l.dst < 0 || l.dst >= router_count()) {
      throw ValidationError("link endpoint out of range");
    }
    out_links_[static_cast<std::size_t>(l.src)].push_back(l.id);
  }
  for (auto& out : out_links_) {
    std::sort(out.begin(), out.end(),
              [&](int a, int b) { return links_[a].dst < links_[b].dst; });
  }
}

int Topology::link_between(int src, int dst) const {
  for (int id : out_links_.at(src))
    if (links_[static_cast<std::size_t>(id)].dst == dst) return id;
  return -1;
}

Placement Topology::placement() const {
  std::vector<TileKind> kinds(routers_.size());
  for (const Router& r : routers_) kinds[static_cast<std::size_t>(r.id)] = r.kind;
  return Placement(rows_, cols_, std::move(kinds));
}

std::vector<std::pair<int, int>> Topology::undirected_edges() const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(links_.size() / 2);
  for (const Link& l : links_)
    if (l.src < l.dst) edges.emplace_back(l.src, l.dst);
  std::sort(edges.begin(), edges.end());
  return edges;
}

bool Topology::fully_connected() const {
  if (routers_.empty()) return true;
  std::vector<char> seen(routers_.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int r = stack.back();
    stack.pop_back();
    for (int id : out_links_[static_cast<std::size_t>(r)]) {
      int next = links_[static_cast<std::size_t>(id)].dst;
      if (!seen[static_cast<std::size_t>(next)]) {
        seen[static_cast<std::size_t>(next)] = 1;
        ++visited;
        stack.push_back(next);
      }
    }
  }
  // Links are symmetric pairs, so one sweep settles both directions.
  return visited == router_count();
}

bool Topology::is_mesh() const {
  if (undirected_link_count() != mesh_link_budget(rows_, cols_)) return false;
  for (const Link& l : links_) {
    GridPos a = routers_[static_cast<std::size_t>(l.src)].pos;
    GridPos b = routers_[static_cast<std::size_t>(l.dst)].pos;
    if (manhattan(a, b) != 1) return false;
  }
  return true;
}

static std::vector<Router> routers_from_placement(const Placement& placement) {
  std::vector<Router> routers;
  routers.reserve(static_cast<std::size_t>(placement.size()));
  for (int i = 0; i < placement.size(); ++i) {
    routers.push_back({i, placement.kind(i), placement.pos(i)});
  }
  return routers;
}

// Builds the directed link list from canonical undirected edges: edges sorted
// ascending, each expanded to (a->b, b->a) with consecutive ids. Keeping ids
// canonical makes archives and reports byte-stable.
static std::vector<Link> links_from_edges(const Placement& placement,
                                          std::vector<std::pair<int, int>> edges) {
  std::sort(edges.begin(), edges.end());
  std::vector<Link> links;
  links.reserve(edges.size() * 2);
  int id = 0;
  for (auto [a, b] : edges) {
    int len = manhattan(placement.pos(a), placement.pos(b));
    links.push_back({id, a, b, len});
    ++id;
    links.push_back({id, b, a, len});
    ++id;
  }
  return links;
}

Topology make_mesh(int rows, int cols, const Placement& placement) {
  if (rows < 2 || cols < 2) {
    throw ConfigError("mesh needs at least a 2x2 grid, got " + std::to_string(rows) + "x" +
                      std::to_string(cols));
  }
  if (placement.rows() != rows || placement.cols() != cols) {
    throw ConfigError("placement grid does not match mesh grid");
  }
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      int id = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(id, id + 1);
      if (r + 1 < rows) edges.emplace_back(id, id + cols);
    }
  }
  return Topology(rows, cols, routers_from_placement(placement),
                  links_from_edges(placement, std::move(edges)));
}

Topology make_custom(int rows, int cols, const Placement& placement,
                     std::vector<std::pair<int, int>> undirected_edges,
                     std::optional<int> k_max) {
  if (placement.rows() != rows || placement.cols() != cols) {
    throw ConfigError("placement grid does not match topology grid");
  }
  const int budget = Topology::mesh_link_budget(rows, cols);
  if (static_cast<int>(undirected_edges.size()) != budget) {
    throw ConfigError("edge list spends " + std::to_string(undirected_edges.size()) +
                      " links, budget is " + std::to_string(budget));
  }
  const int n = rows * cols;
  std::set<std::pair<int, int>> seen;
  for (auto& e : undirected_edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first == e.second) throw ValidationError("self-loop on router " + std::to_string(e.first));
    if (e.first < 0 || e.second >= n) throw ValidationError("edge endpoint out of range");
    if (!seen.insert(e).second) {
      throw ValidationError("duplicate edge (" + std::to_string(e.first) + "," +
                            std::to_string(e.second) + ")");
    }
  }
  Topology topo(rows, cols, routers_from_placement(placement),
                links_from_edges(placement, std::move(undirected_edges)));
  if (!topo.fully_connected()) {
    throw ValidationError("edge list does not connect all routers");
  }
  if (k_max) {
    for (int r = 0; r < n; ++r) {
      if (topo.degree(r) > *k_max) {
        throw ValidationError("router " + std::to_string(r) + " has " +
                              std::to_string(topo.degree(r)) + " ports, k_max is " +
                              std::to_string(*k_max));
      }
    }
  }
  return topo;
}

Topology make_hetnoc(const Topology& wihetnoc) {
  const auto& plan = wihetnoc.wireless();
  if (!plan) throw PreconditionError("make_hetnoc requires a topology with a wireless plan");

  const Placement placement = wihetnoc.placement();
  std::set<std::pair<int, int>> existing;
  for (auto e : wihetnoc.undirected_edges()) existing.insert(e);

  auto add_shortcut = [&](int ra, int rb) {
    if (ra == rb) return;
    std::pair<int, int> e{std::min(ra, rb), std::max(ra, rb)};
    existing.insert(e);  // no-op when a direct wire is already there
  };

  for (const WirelessChannel& ch : plan->channels) {
    for (std::size_t i = 0; i < ch.members.size(); ++i) {
      for (std::size_t j = i + 1; j < ch.members.size(); ++j) {
        const auto& wa = plan->wi(ch.members[i]);
        const auto& wb = plan->wi(ch.members[j]);
        TileKind ka = placement.kind(wa.router);
        TileKind kb = placement.kind(wb.router);
        bool cpu_mc = (ka == TileKind::Cpu && kb == TileKind::Mc) ||
                      (ka == TileKind::Mc && kb == TileKind::Cpu);
        bool gpu_mc = (ka == TileKind::GpuCluster && kb == TileKind::Mc) ||
                      (ka == TileKind::Mc && kb == TileKind::GpuCluster);
        if (cpu_mc || gpu_mc) add_shortcut(wa.router, wb.router);
      }
    }
  }

  std::vector<std::pair<int, int>> edges(existing.begin(), existing.end());
  return Topology(wihetnoc.rows(), wihetnoc.cols(), wihetnoc.routers(),
                  links_from_edges(placement, std::move(edges)));
}

std::vector<Violation> validate(const Topology& topo, const ValidationLimits& limits) {
  std::vector<Violation> out;
  const int n = topo.router_count();

  // Unique ids and grid coverage are enforced at construction; re-check the
  // parts a hand-built or loaded topology could still get wrong.
  std::set<std::pair<int, int>> directed;
  for (const Link& l : topo.links()) {
    directed.insert({l.src, l.dst});
    GridPos a = topo.router(l.src).pos;
    GridPos b = topo.router(l.dst).pos;
    if (l.length != manhattan(a, b) || l.length < 1) {
      out.push_back({"link_length", "link " + std::to_string(l.src) + "->" +
                                        std::to_string(l.dst) + " length " +
                                        std::to_string(l.length)});
    }
  }
  for (const Link& l : topo.links()) {
    if (!directed.count({l.dst, l.src})) {
      out.push_back({"symmetric_pairs",
                     "missing reverse of " + std::to_string(l.src) + "->" + std::to_string(l.dst)});
    }
  }

  if (!topo.fully_connected()) {
    out.push_back({"fully_connected", "some router pair has no path"});
  }

  int budget = limits.link_budget.value_or(Topology::mesh_link_budget(topo.rows(), topo.cols()));
  if (topo.undirected_link_count() != budget) {
    out.push_back({"link_budget", "has " + std::to_string(topo.undirected_link_count()) +
                                      " undirected links, budget is " + std::to_string(budget)});
  }

  if (limits.k_max) {
    for (int r = 0; r < n; ++r) {
      if (topo.degree(r) > *limits.k_max) {
        out.push_back({"k_max", "router " + std::to_string(r) + " has " +
                                    std::to_string(topo.degree(r)) + " ports"});
      }
    }
  }
  if (limits.k_avg) {
    double avg = n ? static_cast<double>(topo.link_count()) / n : 0.0;
    if (avg > *limits.k_avg + 1e-12) {
      out.push_back({"k_avg", "average port count " + std::to_string(avg)});
    }
  }

  if (topo.wireless()) {
    const WirelessPlan& plan = *topo.wireless();
    for (const WirelessChannel& ch : plan.channels) {
      std::set<int> hosts;
      for (int wi : ch.members) {
        if (wi < 0 || wi >= plan.wi_count()) {
          out.push_back({"wireless_plan", "channel member out of range"});
          continue;
        }
        if (!hosts.insert(plan.host_router(wi)).second) {
          out.push_back({"wireless_plan", "channel " + std::to_string(ch.id) +
                                              " has two WIs on router " +
                                              std::to_string(plan.host_router(wi))});
        }
      }
    }
  }
  return out;
}

// --- JSON serialization ------------------------------------------------

using nlohmann::json;

std::string topology_to_json(const Topology& topo) {
  json j;
  j["grid"] = {topo.rows(), topo.cols()};
  json tiles = json::array();
  for (const Router& r : topo.routers()) {
    tiles.push_back({{"pos", {r.pos.row, r.pos.col}}, {"kind", to_string(r.kind)}});
  }
  j["tiles"] = std::move(tiles);
  json edges = json::array();
  for (auto [a, b] : topo.undirected_edges()) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  if (topo.wireless()) {
    const WirelessPlan& plan = *topo.wireless();
    json wis = json::array();
    for (const auto& wi : plan.wis) {
      wis.push_back({{"id", wi.id}, {"router", wi.router}, {"channel", wi.channel}});
    }
    json channels = json::array();
    for (const auto& ch : plan.channels) {
      channels.push_back({{"id", ch.id}, {"members", ch.members}});
    }
    j["wireless"] = {{"channels", std::move(channels)}, {"wis", std::move(wis)}};
  }
  return j.dump(2) + "\n";
}

Topology topology_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("topology json: ") + e.what());
  }
  try {
    int rows = j.at("grid").at(0).get<int>();
    int cols = j.at("grid").at(1).get<int>();
    const auto& tiles = j.at("tiles");
    if (static_cast<int>(tiles.size()) != rows * cols) {
      throw ParseError("tile list does not cover the grid");
    }
    std::vector<TileKind> kinds(static_cast<std::size_t>(rows) * cols, TileKind::GpuCluster);
    for (const auto& t : tiles) {
      int r = t.at("pos").at(0).get<int>();
      int c = t.at("pos").at(1).get<int>();
      if (r < 0 || r >= rows || c < 0 || c >= cols) throw ParseError("tile position out of range");
      kinds[static_cast<std::size_t>(r) * cols + c] = tile_kind_from_string(t.at("kind").get<std::string>());
    }
    Placement placement(rows, cols, std::move(kinds));

    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    std::vector<Router> routers;
    routers.reserve(static_cast<std::size_t>(placement.size()));
    for (int i = 0; i < placement.size(); ++i)
      routers.push_back({i, placement.kind(i), placement.pos(i)});
    std::vector<Link> links;
    {
      std::sort(edges.begin(), edges.end());
      int id = 0;
      for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= placement.size() || b >= placement.size() || a == b) {
          throw ParseError("bad edge in topology file");
        }
        int len = manhattan(placement.pos(a), placement.pos(b));
        links.push_back({id++, a, b, len});
        links.push_back({id++, b, a, len});
      }
    }

    std::optional<WirelessPlan> plan;
    if (j.contains("wireless") && !j["wireless"].is_null()) {
      WirelessPlan p;
      for (const auto& w : j["wireless"].at("wis")) {
        p.wis.push_back({w.at("id").get<int>(), w.at("router").get<int>(), w.at("channel").get<int>()});
      }
      std::sort(p.wis.begin(), p.wis.end(),
                [](const WirelessInterface& a, const WirelessInterface& b) { return a.id < b.id; });
      for (const auto& c : j["wireless"].at("channels")) {
        WirelessChannel ch;
        ch.id = c.at("id").get<int>();
        ch.members = c.at("members").get<std::vector<int>>();
        p.channels.push_back(std::move(ch));
      }
      std::sort(p.channels.begin(), p.channels.end(),
                [](const WirelessChannel& a, const WirelessChannel& b) { return a.id < b.id; });
      plan = std::move(p);
    }
    return Topology(rows, cols, std::move(routers), std::move(links), std::move(plan));
  } catch (const json::exception& e) {
    throw ParseError(std::string("topology json: ") + e.what());
  }
}

void save_topology(const Topology& topo, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open for writing: " + path);
  out << topology_to_json(topo);
  if (!out) throw Error("write failed: " + path);
}

Topology load_topology(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return topology_from_json(ss.str());
}

}  // namespace nocforge
