#include "lbshock/streaming.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

namespace lbshock {

namespace {

std::string failure_message(std::size_t step, int i, int j, const std::string& what) {
  std::ostringstream os;
  os << "numerical failure at step " << step << ", node (" << i << ", " << j << "): " << what;
  return os.str();
}

int wrap(int v, int n) noexcept {
  const int r = v % n;
  return r < 0 ? r + n : r;
}

// Destination sums are kept in one slot per y displacement of the packet, and
// slots are folded in a fixed order. Every destination row then sees the same
// summation order, which keeps y-uniform data bit-identical across rows.
struct Accumulator {
  int reach = 0;  // slots cover dy in [-reach, reach]
  std::size_t cells_per_slot = 0;
  std::vector<Moments> cells;
  std::uint64_t overflow = 0;

  Accumulator(int r, std::size_t n)
    : reach(r), cells_per_slot(n), cells(static_cast<std::size_t>(2 * r + 1) * n) {}

  Moments& at(int dy, std::size_t cell) noexcept {
    return cells[static_cast<std::size_t>(dy + reach) * cells_per_slot + cell];
  }
};

struct Prepared {
  std::vector<NodeEquilibrium> eq;
  int reach = 0;
};

void add(Moments& dst, const Moments& src) noexcept {
  dst.mass += src.mass;
  dst.momentum += src.momentum;
  dst.energy += src.energy;
}

// Equilibria of stored nodes [first, last); returns the largest |dy| any of
// their packets can travel.
int prepare_range(const FlowField& field, const GasModel& g, std::size_t step_index, std::size_t first,
                  std::size_t last, std::vector<NodeEquilibrium>& eq) {
  const int sx = field.stored_nx();
  const auto states = field.states();
  int reach = 0;
  for (std::size_t n = first; n < last; ++n) {
    try {
      eq[n] = node_equilibrium(states[n], g);
    } catch (const std::runtime_error& err) {
      const int i = static_cast<int>(n % static_cast<std::size_t>(sx)) - field.ghost(0);
      const int j = static_cast<int>(n / static_cast<std::size_t>(sx)) - field.ghost(1);
      throw NumericalFailure(step_index, i, j, err.what());
    }
    if (g.dim() == 2) {
      const double vy = states[n].vel.y;
      const int corner = static_cast<int>(std::max(std::abs(std::floor(vy)), std::abs(std::floor(vy) + 1.0)));
      reach = std::max(reach, corner + eq[n].c2);
    }
  }
  return reach;
}

// Scatters stored nodes [first, last) (linear storage order) into acc.
void scatter_range(const FlowField& field, const DirectionSet& dirs, const Prepared& prep, std::size_t first,
                   std::size_t last, Accumulator& acc) {
  const int sx = field.stored_nx();
  const int gx = field.ghost(0);
  const int gy = field.ghost(1);
  const int nx = field.nx();
  const int ny = field.ny();
  const bool wrap_x = field.mode(0) == BoundaryMode::kPeriodic;
  const bool wrap_y = field.mode(1) == BoundaryMode::kPeriodic;
  const auto states = field.states();

  for (std::size_t n = first; n < last; ++n) {
    const int i = static_cast<int>(n % static_cast<std::size_t>(sx)) - gx;
    const int j = static_cast<int>(n / static_cast<std::size_t>(sx)) - gy;
    const bool interior_source = field.is_interior(i, j);
    for_each_packet(states[n], prep.eq[n], dirs, [&](const Packet& p) {
      int di = i + p.dest_offset.x;
      int dj = j + p.dest_offset.y;
      if (wrap_x) {
        di = wrap(di, nx);
      }
      if (wrap_y) {
        dj = wrap(dj, ny);
      }
      if (!field.is_interior(di, dj)) {
        if (interior_source && !field.is_stored(di, dj)) {
          ++acc.overflow;
        }
        return;
      }
      Moments& cell = acc.at(p.dest_offset.y, static_cast<std::size_t>(dj) * static_cast<std::size_t>(nx) +
                                                  static_cast<std::size_t>(di));
      cell.mass += p.mass;
      cell.momentum += p.momentum;
      cell.energy += p.energy;
    });
  }
}

void merge_into(Accumulator& dst, const Accumulator& src) {
  for (std::size_t k = 0; k < dst.cells.size(); ++k) {
    add(dst.cells[k], src.cells[k]);
  }
  dst.overflow += src.overflow;
}

template <typename Job>
void run_workers(std::size_t workers, Job&& job) {
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          job(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& err : errors) {
    if (err) {
      std::rethrow_exception(err);
    }
  }
}

struct Gathered {
  std::vector<Moments> cells;
  std::uint64_t overflow = 0;
};

Gathered scatter(const FlowField& field, const GasModel& g, const StepConfig& cfg, std::size_t step_index) {
  const DirectionSet& dirs = DirectionSet::for_dim(g.dim());
  const std::size_t total = field.states().size();
  const std::size_t workers =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(cfg.threads, 1)), 1, total);
  auto range = [&](std::size_t w) {
    return std::pair{total * w / workers, total * (w + 1) / workers};
  };

  Prepared prep;
  prep.eq.resize(total);
  if (workers == 1) {
    prep.reach = prepare_range(field, g, step_index, 0, total, prep.eq);
  } else {
    std::vector<int> reach(workers, 0);
    run_workers(workers, [&](std::size_t w) {
      const auto [first, last] = range(w);
      reach[w] = prepare_range(field, g, step_index, first, last, prep.eq);
    });
    prep.reach = *std::max_element(reach.begin(), reach.end());
  }

  Accumulator acc(prep.reach, field.interior_size());
  if (workers == 1) {
    scatter_range(field, dirs, prep, 0, total, acc);
  } else {
    std::vector<Accumulator> partial(workers, Accumulator(prep.reach, field.interior_size()));
    std::mutex merge_mutex;
    run_workers(workers, [&](std::size_t w) {
      const auto [first, last] = range(w);
      scatter_range(field, dirs, prep, first, last, partial[w]);
      if (!cfg.deterministic) {
        // Completion order decides the summation order here.
        std::lock_guard lock(merge_mutex);
        merge_into(acc, partial[w]);
      }
    });
    if (cfg.deterministic) {
      for (const Accumulator& p : partial) {
        merge_into(acc, p);
      }
    }
  }

  Gathered out{std::vector<Moments>(acc.cells_per_slot), acc.overflow};
  for (int dy = -acc.reach; dy <= acc.reach; ++dy) {
    for (std::size_t k = 0; k < acc.cells_per_slot; ++k) {
      add(out.cells[k], acc.at(dy, k));
    }
  }
  return out;
}

}  // namespace

NumericalFailure::NumericalFailure(std::size_t step, int i, int j, const std::string& what)
  : std::runtime_error(failure_message(step, i, j, what)), step_(step), i_(i), j_(j) {}

StepResult step(const FlowField& field, const GasModel& g, const StepConfig& cfg, std::size_t step_index) {
  if (field.dim() != g.dim()) {
    throw std::invalid_argument("step: field and gas model dimensions differ");
  }
  const auto start = std::chrono::steady_clock::now();

  const Gathered acc = scatter(field, g, cfg, step_index);

  StepResult out{field, {}};
  StepReport& report = out.report;
  report.step_index = step_index;
  report.overflow_packets = acc.overflow;
  report.min_density = std::numeric_limits<double>::infinity();
  report.min_internal_energy = std::numeric_limits<double>::infinity();

  const int nx = field.nx();
  for (int j = 0; j < field.ny(); ++j) {
    for (int i = 0; i < nx; ++i) {
      const Moments& m = acc.cells[static_cast<std::size_t>(j) * static_cast<std::size_t>(nx) +
                                   static_cast<std::size_t>(i)];
      if (!(m.mass > 0.0)) {
        std::ostringstream os;
        os << "density " << m.mass;
        throw NumericalFailure(step_index, i, j, os.str());
      }
      NodeState s{m.mass, (1.0 / m.mass) * m.momentum, m.energy / m.mass};
      double e = 0.0;
      try {
        e = internal_energy(s);
      } catch (const NegativeEnergy& err) {
        throw NumericalFailure(step_index, i, j, err.what());
      }
      if (e == 0.0) {
        s.etot = 0.5 * s.vel.norm2();
      }
      out.field.at(i, j) = s;
      if (cfg.record_diagnostics) {
        report.total_mass += m.mass;
        report.total_momentum += m.momentum;
        report.total_energy += m.energy;
        report.min_density = std::min(report.min_density, m.mass);
        report.min_internal_energy = std::min(report.min_internal_energy, e);
      }
    }
  }

  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

RunResult run(FlowField field, const GasModel& g, const StepConfig& cfg) {
  RunResult result{std::move(field), {}};
  result.reports.reserve(cfg.max_steps);
  for (std::size_t n = 0; n < cfg.max_steps; ++n) {
    result.field.apply_boundaries();
    StepResult next = step(result.field, g, cfg, n);
    result.field = std::move(next.field);
    result.reports.push_back(next.report);
  }
  return result;
}

}  // namespace lbshock
