#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ehac {

/// Event drawn at each step of the uniformized chain: one of three request
/// classes or an energy-packet arrival.
enum class Event : int {
  RequestBalloon = 0,
  RequestGround = 1,
  RequestSatellite = 2,
  EnergyArrival = 3,
};

constexpr int kNumEvents = 4;
constexpr int kNumClasses = 3;  // request classes; EnergyArrival carries no class

inline bool is_request(Event x) { return x != Event::EnergyArrival; }

/// Request-class index (0 = balloon, 1 = ground, 2 = satellite).
inline int class_index(Event x) {
  if (!is_request(x)) throw std::logic_error("class_index: EnergyArrival has no request class");
  return static_cast<int>(x);
}

inline const char* event_name(Event x) {
  switch (x) {
    case Event::RequestBalloon: return "balloon";
    case Event::RequestGround: return "ground";
    case Event::RequestSatellite: return "satellite";
    case Event::EnergyArrival: return "energy";
  }
  return "?";
}

enum class Action : int { Reject = 0, Accept = 1 };

inline const char* action_name(Action a) { return a == Action::Accept ? "accept" : "reject"; }

/// Environment constants. Defaults are the reference experiment setup:
/// request rates (60, 70, 10)/h, energy rate 110/h, harvest success 0.9,
/// rewards (5, 2, 3), battery capacity 10.
struct ModelParams {
  int battery_capacity = 10;          // E, energy units
  double rate_balloon = 60.0;         // lambda_b, events/hour
  double rate_ground = 70.0;          // lambda_c
  double rate_satellite = 10.0;       // lambda_s
  double rate_energy = 110.0;         // lambda_e
  double harvest_success_prob = 0.9;  // per energy arrival
  double reward_balloon = 5.0;        // monetary units per served request
  double reward_ground = 2.0;
  double reward_satellite = 3.0;
  int energy_per_request = 1;         // fixed at 1; named for auditability

  double reward_for(int cls) const {
    switch (cls) {
      case 0: return reward_balloon;
      case 1: return reward_ground;
      case 2: return reward_satellite;
    }
    throw std::logic_error("reward_for: bad class index");
  }
  double reward_for(Event x) const { return reward_for(class_index(x)); }

  double max_reward() const {
    return std::max(reward_balloon, std::max(reward_ground, reward_satellite));
  }

  /// Throws std::invalid_argument naming the offending field.
  void validate() const {
    if (battery_capacity < 1) throw std::invalid_argument("battery_capacity: must be >= 1");
    if (!(rate_balloon > 0)) throw std::invalid_argument("rate_balloon: must be > 0");
    if (!(rate_ground > 0)) throw std::invalid_argument("rate_ground: must be > 0");
    if (!(rate_satellite > 0)) throw std::invalid_argument("rate_satellite: must be > 0");
    if (!(rate_energy > 0)) throw std::invalid_argument("rate_energy: must be > 0");
    if (!(harvest_success_prob >= 0.0 && harvest_success_prob <= 1.0))
      throw std::invalid_argument("harvest_success_prob: must be in [0, 1]");
    if (!(reward_balloon >= 0)) throw std::invalid_argument("reward_balloon: must be >= 0");
    if (!(reward_ground >= 0)) throw std::invalid_argument("reward_ground: must be >= 0");
    if (!(reward_satellite >= 0)) throw std::invalid_argument("reward_satellite: must be >= 0");
    if (energy_per_request != 1)
      throw std::invalid_argument("energy_per_request: model serves one unit per request");
  }
};

/// Chain state: battery level plus the event that just occurred.
struct State {
  int energy = 0;
  Event event = Event::EnergyArrival;

  bool operator==(const State&) const = default;
};

inline void check_state(const State& s, const ModelParams& p) {
  if (s.energy < 0 || s.energy > p.battery_capacity)
    throw std::invalid_argument("State.energy: out of {0,...,E}");
}

/// Total event rate u = lambda_b + lambda_c + lambda_s + lambda_e; one event
/// per step of the embedded discrete-time chain.
inline double uniformization_constant(const ModelParams& p) {
  return p.rate_balloon + p.rate_ground + p.rate_satellite + p.rate_energy;
}

/// Per-step event probabilities (balloon, ground, satellite, energy).
/// The last component is computed as one minus the rest so the vector sums
/// to 1 exactly.
inline std::array<double, kNumEvents> event_distribution(const ModelParams& p) {
  const double u = uniformization_constant(p);
  std::array<double, kNumEvents> q{};
  q[0] = p.rate_balloon / u;
  q[1] = p.rate_ground / u;
  q[2] = p.rate_satellite / u;
  q[3] = 1.0 - (q[0] + q[1] + q[2]);
  return q;
}

/// Revenue collected in one step: the class reward when a request is
/// accepted and the battery can actually serve it, zero otherwise.
/// Energy arrivals never pay.
inline double immediate_reward(const State& s, Action a, const ModelParams& p) {
  if (!is_request(s.event) || a != Action::Accept) return 0.0;
  if (s.energy < p.energy_per_request) return 0.0;  // infeasible accept is a no-op
  return p.reward_for(s.event);
}

/// Battery level after one step. Serving consumes one unit; a successful
/// harvest adds one unit unless the battery is full. Infeasible accepts
/// leave the level unchanged.
inline int apply_transition(const State& s, Action a, bool harvest_success,
                            const ModelParams& p) {
  if (is_request(s.event)) {
    if (a == Action::Accept && s.energy >= p.energy_per_request)
      return s.energy - p.energy_per_request;
    return s.energy;
  }
  if (harvest_success && s.energy < p.battery_capacity) return s.energy + 1;
  return s.energy;
}

}  // namespace ehac
