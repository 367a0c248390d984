#include "swarmdiff/sim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace swarmdiff::sim {

void SimConfig::validate() const {
  if (n_robots < 2) throw std::invalid_argument("config: n_robots must be >= 2");
  if (!(comm_range > 0.0)) throw std::invalid_argument("config: comm_range must be > 0");
  if (!(arena_side > 0.0)) throw std::invalid_argument("config: arena_side must be > 0");
  if (!(speed > 0.0)) throw std::invalid_argument("config: speed must be > 0");
  if (!(dt > 0.0)) throw std::invalid_argument("config: dt must be > 0");
  if (duration < 0.0) throw std::invalid_argument("config: negative duration");
  if (msg_period <= 0.0) throw std::invalid_argument("config: msg_period must be > 0");
  if (msg_window < 0.0) throw std::invalid_argument("config: negative msg_window");
  if (duration < msg_window) throw std::invalid_argument("config: duration < msg_window");
  if (msg_source < 0 || msg_source >= n_robots)
    throw std::invalid_argument("config: msg_source out of range");
  walk.resolved(arena_side, tick_distance());  // throws on bad walk parameters
}

int DiffusionCurve::informed_at(double t) const {
  int value = 0;
  for (const auto& [ts, n] : samples) {
    if (ts > t) break;
    value = n;
  }
  return value;
}

std::vector<std::pair<int, int>> detect_encounters(
    std::span<const std::pair<double, double>> positions, double comm_range) {
  if (!(comm_range > 0.0)) throw std::invalid_argument("detect_encounters: comm_range must be > 0");
  const double r2 = comm_range * comm_range;
  const int n = static_cast<int>(positions.size());

  // Bucket robots into cells of side comm_range; any pair closer than the
  // range differs by at most one cell index per axis.
  std::unordered_map<std::uint64_t, std::vector<int>> cells;
  cells.reserve(static_cast<std::size_t>(n) * 2);
  auto cell_of = [&](int i) {
    const auto cx = static_cast<std::int64_t>(std::floor(positions[i].first / comm_range));
    const auto cy = static_cast<std::int64_t>(std::floor(positions[i].second / comm_range));
    return std::pair<std::int64_t, std::int64_t>{cx, cy};
  };
  auto key_of = [](std::int64_t cx, std::int64_t cy) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(cx)) << 32) |
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(cy));
  };
  for (int i = 0; i < n; ++i) {
    const auto [cx, cy] = cell_of(i);
    cells[key_of(cx, cy)].push_back(i);
  }

  std::vector<std::pair<int, int>> out;
  auto close = [&](int i, int j) {
    const double dx = positions[i].first - positions[j].first;
    const double dy = positions[i].second - positions[j].second;
    return dx * dx + dy * dy < r2;
  };
  // Forward-neighbor scan so each cell pair is visited once.
  static constexpr int kForward[4][2] = {{1, 0}, {-1, 1}, {0, 1}, {1, 1}};
  for (const auto& [key, members] : cells) {
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (close(members[i], members[j]))
          out.emplace_back(std::min(members[i], members[j]), std::max(members[i], members[j]));
    const auto [cx, cy] = cell_of(members.front());
    for (const auto& d : kForward) {
      const auto it = cells.find(key_of(cx + d[0], cy + d[1]));
      if (it == cells.end()) continue;
      for (int a : members)
        for (int b : it->second)
          if (close(a, b)) out.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

World::World(const SimConfig& config) : World(config, {}) {}

World::World(const SimConfig& config, std::vector<mobility::Pose> poses)
    : config_(config),
      walk_(config.walk.resolved(config.arena_side, config.tick_distance())),
      rng_(config.seed) {
  config_.validate();
  if (!poses.empty() && static_cast<int>(poses.size()) != config_.n_robots)
    throw std::invalid_argument("world: pose count != n_robots");
  init(std::move(poses));
}

void World::init(std::vector<mobility::Pose> poses) {
  const int n = config_.n_robots;
  if (poses.empty()) {
    poses.reserve(n);
    for (int i = 0; i < n; ++i) {
      mobility::Pose p;
      p.x = rng_.uniform(0.0, config_.arena_side);
      p.y = rng_.uniform(0.0, config_.arena_side);
      p.heading = rng_.uniform(-std::numbers::pi, std::numbers::pi);
      poses.push_back(p);
    }
  }
  walkers_.resize(n);
  for (int i = 0; i < n; ++i) walkers_[i].pose = poses[i];
  in_range_.assign(static_cast<std::size_t>(n) * n, 0);
  episode_logged_.assign(static_cast<std::size_t>(n) * n, 0);
  // Pairs already in range at t=0 exchange normally but log no rising edge:
  // only crossings observed after the start enter the encounter log.
  std::vector<std::pair<double, double>> positions(n);
  for (int i = 0; i < n; ++i) positions[i] = {walkers_[i].pose.x, walkers_[i].pose.y};
  pairs_ = detect_encounters(positions, config_.comm_range);
  for (const auto& [a, b] : pairs_) {
    in_range_[static_cast<std::size_t>(a) * n + b] = 1;
    in_range_[static_cast<std::size_t>(b) * n + a] = 1;
  }
  if (config_.record_trajectories) record_trajectories();
}

void World::emit(int msg_id) {
  Message m;
  m.id = msg_id;
  m.holder.assign(config_.n_robots, 0);
  m.holder[config_.msg_source] = 1;
  m.count = 1;
  m.curve.msg_id = msg_id;
  m.curve.t0 = time_;
  m.curve.samples.emplace_back(time_, 1);
  messages_.push_back(std::move(m));
}

void World::refresh_pairs() {
  const int n = config_.n_robots;
  std::vector<std::pair<double, double>> positions(n);
  for (int i = 0; i < n; ++i) positions[i] = {walkers_[i].pose.x, walkers_[i].pose.y};
  auto now = detect_encounters(positions, config_.comm_range);

  auto idx = [n](int a, int b) { return static_cast<std::size_t>(a) * n + b; };
  for (const auto& [a, b] : now) {
    if (!in_range_[idx(a, b)]) {
      output_.encounters.push_back({time_, a, b, EncounterEvent::Kind::Rising});
      episode_logged_[idx(a, b)] = 1;
    }
  }
  for (const auto& [a, b] : pairs_) {
    if (!std::binary_search(now.begin(), now.end(), std::pair<int, int>{a, b})) {
      if (episode_logged_[idx(a, b)])
        output_.encounters.push_back({time_, a, b, EncounterEvent::Kind::Falling});
      episode_logged_[idx(a, b)] = 0;
      in_range_[idx(a, b)] = 0;
      in_range_[idx(b, a)] = 0;
    }
  }
  for (const auto& [a, b] : now) {
    in_range_[idx(a, b)] = 1;
    in_range_[idx(b, a)] = 1;
  }
  pairs_ = std::move(now);
}

void World::step() {
  time_ += config_.dt;
  for (auto& w : walkers_)
    mobility::advance(w, walk_, config_.speed, config_.dt, config_.arena_side, rng_);
  refresh_pairs();

  // Union of pre-tick message sets across in-range pairs. The snapshot keeps
  // the exchange order-independent and stops intra-tick relay chains.
  for (auto& msg : messages_) {
    if (msg.count == config_.n_robots) continue;
    exchange_snapshot_ = msg.holder;
    for (const auto& [a, b] : pairs_) {
      msg.holder[a] |= exchange_snapshot_[b];
      msg.holder[b] |= exchange_snapshot_[a];
    }
    int count = 0;
    for (std::uint8_t h : msg.holder) count += h;
    if (count != msg.count) {
      msg.count = count;
      msg.curve.samples.emplace_back(time_, count);
    }
  }

  if (config_.record_trajectories) record_trajectories();
}

void World::record_trajectories() {
  for (int i = 0; i < config_.n_robots; ++i) {
    const auto& p = walkers_[i].pose;
    output_.trajectories.push_back({time_, i, p.x, p.y, p.heading});
  }
}

bool World::informed(int msg_id, int robot) const {
  for (const auto& m : messages_)
    if (m.id == msg_id) return m.holder[robot] != 0;
  return false;
}

int World::informed_count(int msg_id) const {
  for (const auto& m : messages_)
    if (m.id == msg_id) return m.count;
  return 0;
}

SimOutput World::take_output() {
  for (auto& m : messages_) output_.curves.push_back(std::move(m.curve));
  messages_.clear();
  return std::move(output_);
}

SimOutput run(const SimConfig& config) {
  config.validate();
  World world(config);

  world.emit(0);  // the experiment's defining message exists even when msg_window = 0
  int next_msg = 1;

  const auto n_steps = static_cast<long long>(std::floor(config.duration / config.dt + 1e-9));
  for (long long s = 1; s <= n_steps; ++s) {
    world.step();
    while (next_msg * config.msg_period < config.msg_window &&
           next_msg * config.msg_period <= world.time() + 1e-9) {
      world.emit(next_msg);
      ++next_msg;
    }
  }
  return world.take_output();
}

}  // namespace swarmdiff::sim
