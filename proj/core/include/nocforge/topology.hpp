#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nocforge {

enum class TileKind : std::uint8_t { Cpu, GpuCluster, Mc };

const char* to_string(TileKind kind);
TileKind tile_kind_from_string(const std::string& s);

struct GridPos {
  int row = 0;
  int col = 0;
  friend bool operator==(const GridPos&, const GridPos&) = default;
};

inline int manhattan(GridPos a, GridPos b) {
  return std::abs(a.row - b.row) + std::abs(a.col - b.col);
}

// Which kind of tile sits at each grid position. Router ids are row-major:
// id = row * cols + col.
class Placement {
public:
  Placement(int rows, int cols, std::vector<TileKind> kinds);

  static Placement uniform(int rows, int cols, TileKind kind);
  // CPUs on the 2x2 center block, MCs packed immediately around it. This is
  // the mesh layout that minimizes CPU-MC distance at the cost of routing
  // GPU-MC traffic through the center.
  static Placement center_cluster(int rows, int cols);
  // CPUs on the 2x2 center block, one MC at the center tile of each grid
  // quadrant. Default layout for the hybrid topologies.
  static Placement quadrant_mc(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int size() const { return rows_ * cols_; }
  TileKind kind(int router_id) const { return kinds_.at(router_id); }
  GridPos pos(int router_id) const { return {router_id / cols_, router_id % cols_}; }
  int id_at(GridPos p) const { return p.row * cols_ + p.col; }

  std::vector<int> routers_of(TileKind kind) const;
  int count(TileKind kind) const;

  const std::vector<TileKind>& kinds() const { return kinds_; }

  friend bool operator==(const Placement&, const Placement&) = default;

private:
  int rows_;
  int cols_;
  std::vector<TileKind> kinds_;
};

struct Router {
  int id = 0;
  TileKind kind = TileKind::GpuCluster;
  GridPos pos;
  friend bool operator==(const Router&, const Router&) = default;
};

// Directed inter-router link. Links always come in src<->dst pairs; length is
// the Manhattan distance between the endpoint tiles and equals the number of
// pipeline cycles a flit spends on the wire.
struct Link {
  int id = 0;
  int src = 0;
  int dst = 0;
  int length = 1;
  friend bool operator==(const Link&, const Link&) = default;
};

struct WirelessInterface {
  int id = 0;
  int router = 0;
  int channel = 0;
  friend bool operator==(const WirelessInterface&, const WirelessInterface&) = default;
};

struct WirelessChannel {
  int id = 0;
  std::vector<int> members;  // WI ids, ascending
  friend bool operator==(const WirelessChannel&, const WirelessChannel&) = default;
};

// Channel 0 is reserved for CPU<->MC; the remaining channels carry GPU-MC
// traffic, one MC-hosted WI plus GPU-hosted WIs each.
struct WirelessPlan {
  std::vector<WirelessChannel> channels;
  std::vector<WirelessInterface> wis;

  int wi_count() const { return static_cast<int>(wis.size()); }
  const WirelessInterface& wi(int id) const { return wis.at(id); }
  int host_router(int wi_id) const { return wis.at(wi_id).router; }

  friend bool operator==(const WirelessPlan&, const WirelessPlan&) = default;
};

class Topology {
public:
  Topology(int rows, int cols, std::vector<Router> routers, std::vector<Link> links,
           std::optional<WirelessPlan> wireless = std::nullopt);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int router_count() const { return static_cast<int>(routers_.size()); }
  int link_count() const { return static_cast<int>(links_.size()); }  // directed
  int undirected_link_count() const { return link_count() / 2; }

  const std::vector<Router>& routers() const { return routers_; }
  const Router& router(int id) const { return routers_.at(id); }
  const std::vector<Link>& links() const { return links_; }
  const Link& link(int id) const { return links_.at(id); }

  // Outgoing link ids of r, ascending by destination router id.
  const std::vector<int>& out_links(int r) const { return out_links_.at(r); }
  // Inter-tile port count k_r (undirected wireline degree).
  int degree(int r) const { return static_cast<int>(out_links_.at(r).size()); }
  // Link id for src->dst, or -1.
  int link_between(int src, int dst) const;

  const std::optional<WirelessPlan>& wireless() const { return wireless_; }
  void set_wireless(std::optional<WirelessPlan> plan) { wireless_ = std::move(plan); }

  Placement placement() const;
  std::vector<std::pair<int, int>> undirected_edges() const;  // canonical a<b, sorted

  bool fully_connected() const;
  bool is_mesh() const;

  // Undirected link budget of the reference mesh on the same grid.
  static int mesh_link_budget(int rows, int cols) {
    return rows * (cols - 1) + cols * (rows - 1);
  }

  friend bool operator==(const Topology&, const Topology&) = default;

private:
  int rows_;
  int cols_;
  std::vector<Router> routers_;
  std::vector<Link> links_;
  std::optional<WirelessPlan> wireless_;
  std::vector<std::vector<int>> out_links_;
};

Topology make_mesh(int rows, int cols, const Placement& placement);

// Materializes an optimizer edge list. The edge list must spend exactly the
// mesh link budget; connectivity is always enforced, the degree bound only
// when k_max is given.
Topology make_custom(int rows, int cols, const Placement& placement,
                     std::vector<std::pair<int, int>> undirected_edges,
                     std::optional<int> k_max = std::nullopt);

// Replaces every wireless shortcut with a pipelined long-range wire pair:
// CPU-MC pairs on the dedicated channel, and each GPU-WI-to-MC-WI pairing on
// the GPU channels. The wireless plan is dropped from the result.
Topology make_hetnoc(const Topology& wihetnoc);

struct Violation {
  std::string constraint;
  std::string detail;
};

struct ValidationLimits {
  std::optional<int> k_max;
  std::optional<double> k_avg;
  // Expected undirected link count; defaults to the mesh budget of the grid.
  std::optional<int> link_budget;
};

// Diagnostics, not failures: returns one entry per violated constraint.
std::vector<Violation> validate(const Topology& topo, const ValidationLimits& limits = {});

void save_topology(const Topology& topo, const std::string& path);
Topology load_topology(const std::string& path);
std::string topology_to_json(const Topology& topo);
Topology topology_from_json(const std::string& text);

}  // namespace nocforge
