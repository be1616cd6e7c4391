#include "forager/world.hpp"

#include <stdexcept>
#include <string>

namespace forager {

const char* role_name(Role r) {
  switch (r) {
    case Role::Generalist: return "generalist";
    case Role::Dropper: return "dropper";
    case Role::Collector: return "collector";
  }
  return "?";
}

std::optional<Role> parse_role(std::string_view name) {
  if (name == "generalist") return Role::Generalist;
  if (name == "dropper") return Role::Dropper;
  if (name == "collector") return Role::Collector;
  return std::nullopt;
}

const char* scenario_kind_name(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::GeneralistTrain: return "generalist-train";
    case ScenarioKind::DropperTrain: return "dropper-train";
    case ScenarioKind::CollectorTrain: return "collector-train";
    case ScenarioKind::PostEvalGG: return "posteval-gg";
    case ScenarioKind::PostEvalDC: return "posteval-dc";
  }
  return "?";
}

double default_horizon(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::GeneralistTrain: return 240.0;
    case ScenarioKind::DropperTrain: return 60.0;
    case ScenarioKind::CollectorTrain: return 60.0;
    case ScenarioKind::PostEvalGG: return 300.0;
    case ScenarioKind::PostEvalDC: return 300.0;
  }
  return 0.0;
}

bool identical(const WorldState& a, const WorldState& b) {
  if (a.time != b.time || a.robots.size() != b.robots.size() ||
      a.objects.size() != b.objects.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.robots.size(); ++i) {
    const RobotState& ra = a.robots[i];
    const RobotState& rb = b.robots[i];
    if (ra.position.x() != rb.position.x() || ra.position.y() != rb.position.y() ||
        ra.heading != rb.heading || ra.role != rb.role || ra.carrying != rb.carrying) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.objects.size(); ++i) {
    const ObjectState& oa = a.objects[i];
    const ObjectState& ob = b.objects[i];
    if (oa.id != ob.id || oa.position.x() != ob.position.x() ||
        oa.position.y() != ob.position.y() || oa.radius != ob.radius ||
        oa.carried_by != ob.carried_by || oa.sliding != ob.sliding) {
      return false;
    }
  }
  return true;
}

namespace {

constexpr int kMaxPlacementAttempts = 10000;

struct RobotInit {
  Role role;
  // one area = fixed start, two areas = uniform coin between them
  AreaKind primary;
  std::optional<AreaKind> alternate;
};

std::vector<RobotInit> robot_inits(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::GeneralistTrain:
      return {{Role::Generalist, AreaKind::Nest, AreaKind::Cache}};
    case ScenarioKind::DropperTrain:
      return {{Role::Dropper, AreaKind::Source, std::nullopt}};
    case ScenarioKind::CollectorTrain:
      return {{Role::Collector, AreaKind::Nest, AreaKind::Cache}};
    case ScenarioKind::PostEvalGG:
      return {{Role::Generalist, AreaKind::Nest, std::nullopt},
              {Role::Generalist, AreaKind::Source, std::nullopt}};
    case ScenarioKind::PostEvalDC:
      return {{Role::Collector, AreaKind::Nest, std::nullopt},
              {Role::Dropper, AreaKind::Source, std::nullopt}};
  }
  throw std::logic_error("robot_inits: bad scenario kind");
}

AreaKind object_area(ScenarioKind kind) {
  return kind == ScenarioKind::CollectorTrain ? AreaKind::Cache : AreaKind::Source;
}

}  // namespace

WorldState spawn_world(const Scenario& scenario, const SimParams& params) {
  const ArenaSpec& arena = params.arena;
  Rng rng(derive_seed(scenario.seed, seed_tag::kSpawn));
  WorldState world;

  // Objects first, then robots, each rejection-sampled against everything
  // already placed. Fixed draw order keeps the result a pure function of
  // (scenario, params).
  {
    const auto [lo, hi] = area_span(arena, object_area(scenario.kind));
    const double xlo = kObjectRadius;
    const double xhi = arena.width - kObjectRadius;
    const double ylo = std::max(lo, kObjectRadius);
    const double yhi = std::min(hi, arena.length - kObjectRadius);
    for (int m = 0; m < scenario.object_count; ++m) {
      bool placed = false;
      for (int attempt = 0; attempt < kMaxPlacementAttempts && !placed; ++attempt) {
        const Vec2 pos(rng.uniform(xlo, xhi), rng.uniform(ylo, yhi));
        bool ok = true;
        for (const ObjectState& other : world.objects) {
          if ((other.position - pos).squaredNorm() < 4.0 * kObjectRadius * kObjectRadius) {
            ok = false;
            break;
          }
        }
        if (ok) {
          world.objects.push_back(ObjectState{m, pos, kObjectRadius, std::nullopt, false});
          placed = true;
        }
      }
      if (!placed) throw std::runtime_error("spawn_world: object placement failed");
    }
  }

  const double rr = params.robot.radius;
  for (const RobotInit& init : robot_inits(scenario.kind)) {
    const AreaKind start_area =
        init.alternate ? (rng.uniform() < 0.5 ? init.primary : *init.alternate) : init.primary;
    const auto [lo, hi] = area_span(arena, start_area);
    const double xlo = rr;
    const double xhi = arena.width - rr;
    const double ylo = std::max(lo, rr);
    const double yhi = std::min(hi, arena.length - rr);
    bool placed = false;
    for (int attempt = 0; attempt < kMaxPlacementAttempts && !placed; ++attempt) {
      const Vec2 pos(rng.uniform(xlo, xhi), rng.uniform(ylo, yhi));
      const double heading = rng.uniform(0.0, kTwoPi);
      bool ok = true;
      for (const ObjectState& obj : world.objects) {
        if ((obj.position - pos).squaredNorm() < (rr + obj.radius) * (rr + obj.radius)) {
          ok = false;
          break;
        }
      }
      for (const RobotState& other : world.robots) {
        if (!ok) break;
        if ((other.position - pos).squaredNorm() < 4.0 * rr * rr) ok = false;
      }
      if (ok) {
        world.robots.push_back(RobotState{pos, heading, init.role, std::nullopt});
        placed = true;
      }
    }
    if (!placed) throw std::runtime_error("spawn_world: robot placement failed");
  }
  return world;
}

std::pair<WorldState, Scenario> spawn_scenario(ScenarioKind kind, std::uint64_t seed,
                                               const SimParams& params) {
  Scenario scenario{kind, seed, default_horizon(kind), 7};
  return {spawn_world(scenario, params), scenario};
}

int objects_in_area(const WorldState& world, const ArenaSpec& arena, AreaKind area) {
  int n = 0;
  for (const ObjectState& obj : world.objects) {
    if (area_at(arena, obj.position) == area) ++n;
  }
  return n;
}

std::array<int, 4> area_counts(const WorldState& world, const ArenaSpec& arena) {
  std::array<int, 4> counts{};
  for (const ObjectState& obj : world.objects) {
    counts[static_cast<std::size_t>(area_at(arena, obj.position))]++;
  }
  return counts;
}

}  // namespace forager
