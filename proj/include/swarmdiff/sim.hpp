#ifndef SWARMDIFF_SIM_HPP
#define SWARMDIFF_SIM_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "swarmdiff/mobility.hpp"
#include "swarmdiff/rng.hpp"

namespace swarmdiff::sim {

/// Full description of one simulation run. Defaults are the desk-scale
/// profile; paper_scale() restores the full-length campaign values.
struct SimConfig {
  int n_robots = 20;
  double comm_range = 10.0;  // meters
  double arena_side = 200.0; // meters
  double speed = 0.05;       // m/s
  double dt = 1.0;           // seconds per tick
  double duration = 72000.0; // seconds (20 h)
  mobility::WalkPolicy walk = mobility::WalkPolicy::crw(0.7);
  std::uint64_t seed = 1;
  int msg_source = 0;
  double msg_period = 3600.0;  // seconds between emissions
  double msg_window = 18000.0; // emissions stop at this time (5 h)
  bool record_trajectories = false;

  SimConfig& paper_scale() {
    duration = 360000.0;   // 100 h
    msg_window = 180000.0; // 50 h
    return *this;
  }

  double tick_distance() const { return speed * dt; }

  /// Throws std::invalid_argument on out-of-domain parameters.
  void validate() const;
};

struct EncounterEvent {
  enum class Kind { Rising, Falling };
  double t = 0.0;
  int a = 0;  // a < b
  int b = 0;
  Kind kind = Kind::Rising;
};

/// Informed-count time series for one message. Samples are appended only when
/// the count changes; the first sample is (emission time, 1).
struct DiffusionCurve {
  int msg_id = 0;
  double t0 = 0.0;  // emission time
  std::vector<std::pair<double, int>> samples;

  int informed_at(double t) const;
  int final_informed() const { return samples.empty() ? 0 : samples.back().second; }
};

struct TrajectorySample {
  double t;
  int robot;
  double x, y, heading;
};

struct SimOutput {
  std::vector<EncounterEvent> encounters;
  std::vector<DiffusionCurve> curves;
  std::vector<TrajectorySample> trajectories;  // empty unless requested
};

/// All unordered pairs (a,b), a<b, with Euclidean distance strictly below
/// comm_range. Uniform-grid implementation with cell size comm_range; agrees
/// exactly with the brute-force pair scan. Result sorted lexicographically.
std::vector<std::pair<int, int>> detect_encounters(
    std::span<const std::pair<double, double>> positions, double comm_range);

/// Simulation state stepped one dt at a time. Message exchange on contact is
/// a same-tick union of the pre-tick message sets: no intra-tick relay.
class World {
 public:
  explicit World(const SimConfig& config);
  /// Scripted placement for tests; walkers start with the given poses.
  World(const SimConfig& config, std::vector<mobility::Pose> poses);

  /// Source robot emits a new message at the current time.
  void emit(int msg_id);

  /// Advance one tick: move robots, update pair in-range state, log
  /// rising/falling crossings, exchange messages while in range.
  void step();

  double time() const { return time_; }
  const SimConfig& config() const { return config_; }
  const std::vector<mobility::Walker>& walkers() const { return walkers_; }
  bool informed(int msg_id, int robot) const;
  int informed_count(int msg_id) const;
  int message_count() const { return static_cast<int>(messages_.size()); }

  SimOutput take_output();

 private:
  struct Message {
    int id;
    std::vector<std::uint8_t> holder;
    int count;
    DiffusionCurve curve;
  };

  void init(std::vector<mobility::Pose> poses);
  void refresh_pairs();
  void record_trajectories();

  SimConfig config_;
  mobility::WalkPolicy walk_;  // resolved policy
  Rng rng_;
  double time_ = 0.0;
  std::vector<mobility::Walker> walkers_;
  std::vector<std::uint8_t> in_range_;        // n*n symmetric matrix
  std::vector<std::uint8_t> episode_logged_;  // pair episodes that logged a rising edge
  std::vector<std::pair<int, int>> pairs_;    // current in-range pairs
  std::vector<Message> messages_;
  std::vector<std::uint8_t> exchange_snapshot_;
  SimOutput output_;
};

/// Run the whole schedule: robots placed uniformly at random, message k
/// emitted at t = k*msg_period while below msg_window (message 0 always
/// exists), stepping until duration. Deterministic given the seed.
SimOutput run(const SimConfig& config);

}  // namespace swarmdiff::sim

#endif
