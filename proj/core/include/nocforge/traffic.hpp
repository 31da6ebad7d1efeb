#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nocforge/topology.hpp"

namespace nocforge {

enum class LayerRole : std::uint8_t { Convolutional, Pooling, FullyConnected };

const char* to_string(LayerRole role);

// One workload phase. rel_injection is the phase's share of the peak phase's
// injection rate; the two fractions shape the MC-adjacent flow split.
struct LayerProfile {
  std::string name;
  LayerRole role = LayerRole::Convolutional;
  double rel_injection = 1.0;        // (0, 1]
  double mc_to_core_fraction = 0.5;  // [0, 1] share of MC-adjacent traffic flowing MC->core
  double cpu_traffic_fraction = 0.0; // [0, 1] share of total traffic that is CPU<->MC
  std::uint64_t duration = 20000;    // cycles

  bool valid() const {
    return rel_injection > 0.0 && rel_injection <= 1.0 && mc_to_core_fraction >= 0.0 &&
           mc_to_core_fraction <= 1.0 && cpu_traffic_fraction >= 0.0 &&
           cpu_traffic_fraction <= 1.0 && duration > 0;
  }
};

// Router-pair injection frequencies f[i][j] in flits/cycle, zero diagonal.
class TrafficMatrix {
public:
  explicit TrafficMatrix(int routers);

  int size() const { return size_; }
  double at(int i, int j) const { return f_[index(i, j)]; }
  void set(int i, int j, double rate);
  void add(int i, int j, double rate) { set(i, j, at(i, j) + rate); }

  double total() const;
  void scale(double c);

  struct Flow {
    int src;
    int dst;
    double rate;
  };
  // Nonzero entries in row-major order.
  std::vector<Flow> flows() const;

private:
  std::size_t index(int i, int j) const;
  int size_;
  std::vector<double> f_;
};

struct ManyToFewOptions {
  // Default pairs each GPU with its Manhattan-nearest MC (ties to the lower
  // MC id); set uniform_over_mcs to spread GPU traffic over all MCs instead.
  bool uniform_over_mcs = false;
};

TrafficMatrix build_many_to_few(const Placement& placement, const LayerProfile& profile,
                                double peak_rate, const ManyToFewOptions& opts = {});

// Known presets: "lenet", "cdbnet".
std::vector<LayerProfile> workload_preset(const std::string& name);

// Duration-weighted mean of the per-layer matrices.
TrafficMatrix aggregate_matrix(const Placement& placement, const std::vector<LayerProfile>& layers,
                               double peak_rate, const ManyToFewOptions& opts = {});

// CSV trace with optional header "src,dst,rate_flits_per_cycle".
TrafficMatrix load_trace(const std::string& path, int routers);
void save_trace(const TrafficMatrix& m, const std::string& path);

// GPU tile -> MC router it exchanges data with under the nearest-MC rule.
std::vector<int> nearest_mc_by_router(const Placement& placement);

}  // namespace nocforge
