// Copyright 2026 The corrnoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "corrnoise/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

#include <Eigen/Eigenvalues>

#include "parallel.hpp"

namespace corrnoise {
namespace {

constexpr std::size_t kChunk = 64;

CVector phase_rotate(const Eigen::VectorXd& energies, const CVector& amps, double t) {
  CVector out(amps.size());
  for (Eigen::Index k = 0; k < amps.size(); ++k) out[k] = std::polar(1.0, -energies[k] * t) * amps[k];
  return out;
}

// Replays a circuit on amplitude vectors, visiting every time sample.
class CircuitIntegrator {
 public:
  CircuitIntegrator(const Circuit& circuit, GateModel model, int samples_per_gate,
                    std::span<const double> static_fields)
      : model_(model), static_diag_(z_field_diagonal(static_fields, circuit.n_qubits())) {
    const int n = circuit.n_qubits();
    double t0 = 0.0;
    times_.push_back(0.0);
    for (const auto& op : circuit.ops()) {
      Interval iv;
      iv.duration = op.duration;
      iv.trivial = op.kind == GateKind::WAIT || op.kind == GateKind::I;
      if (!iv.trivial) {
        iv.unitary = gate_unitary(op, n).matrix();
        iv.generator = gate_generator(op, n).matrix();
      }
      iv.steps = op.duration > 0.0 ? samples_per_gate : 1;
      edges_.push_back(t0);
      for (int j = 1; j <= iv.steps; ++j) {
        times_.push_back(op.duration > 0.0 ? t0 + op.duration * j / iv.steps : t0);
      }
      t0 += op.duration;
      intervals_.push_back(std::move(iv));
    }
    edges_.push_back(t0);
  }

  const std::vector<double>& times() const { return times_; }
  const std::vector<double>& edges() const { return edges_; }
  std::size_t n_samples() const { return times_.size(); }

  template <class Visit>
  void run(const CVector& initial, const Eigen::VectorXd* noise_diag, Visit&& visit) const {
    std::size_t s = 0;
    CVector psi = initial;
    visit(s++, psi);
    const Eigen::VectorXd diag = noise_diag ? Eigen::VectorXd(static_diag_ + *noise_diag) : static_diag_;
    for (const auto& iv : intervals_) {
      if (iv.duration == 0.0) {
        if (!iv.trivial) psi = iv.unitary * psi;
        visit(s++, psi);
        continue;
      }
      if (model_ == GateModel::kContinuous && !iv.trivial) {
        CMatrix h = iv.generator / iv.duration;
        h.diagonal() += diag.cast<Complex>();
        Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
        const CVector coeff = es.eigenvectors().adjoint() * psi;
        for (int j = 1; j <= iv.steps; ++j) {
          psi = es.eigenvectors() * phase_rotate(es.eigenvalues(), coeff, iv.duration * j / iv.steps);
          visit(s++, psi);
        }
        continue;
      }
      const CVector start = psi;
      for (int j = 1; j <= iv.steps; ++j) {
        psi = phase_rotate(diag, start, iv.duration * j / iv.steps);
        if (j == iv.steps && !iv.trivial) psi = iv.unitary * psi;
        visit(s++, psi);
      }
    }
  }

 private:
  struct Interval {
    double duration = 0.0;
    int steps = 1;
    bool trivial = true;
    CMatrix unitary;
    CMatrix generator;
  };

  GateModel model_;
  Eigen::VectorXd static_diag_;
  std::vector<Interval> intervals_;
  std::vector<double> times_;
  std::vector<double> edges_;
};

struct Accumulator {
  std::vector<CMatrix> rho_sum;
  double infidelity_sum = 0.0;
  double infidelity_sq_sum = 0.0;

  Accumulator(std::size_t n_times, Eigen::Index dim)
      : rho_sum(n_times, CMatrix::Zero(dim, dim)) {}

  Accumulator& operator+=(const Accumulator& other) {
    for (std::size_t s = 0; s < rho_sum.size(); ++s) rho_sum[s] += other.rho_sum[s];
    infidelity_sum += other.infidelity_sum;
    infidelity_sq_sum += other.infidelity_sq_sum;
    return *this;
  }
};

double relative_change(double prev, double cur) {
  const double scale = std::max(std::abs(prev), std::abs(cur));
  if (scale == 0.0) return 0.0;
  return std::abs(cur - prev) / scale;
}

void check_inputs(const Circuit& circuit, const StateVector& initial, const std::vector<double>& static_fields) {
  if (initial.n_qubits() != circuit.n_qubits()) {
    throw std::invalid_argument("initial state and circuit have different qubit counts");
  }
  if (static_fields.size() != static_cast<std::size_t>(circuit.n_qubits())) {
    throw std::invalid_argument("expected one static field per qubit");
  }
}

}  // namespace

std::string_view to_string(GateModel m) {
  return m == GateModel::kContinuous ? "continuous" : "instantaneous";
}

GateModel gate_model_from_string(std::string_view s) {
  if (s == "continuous") return GateModel::kContinuous;
  if (s == "instantaneous") return GateModel::kInstantaneous;
  throw std::invalid_argument("unknown gate model '" + std::string(s) + "'");
}

void EnsembleConfig::validate() const {
  if (n_realizations_initial < 2) throw std::invalid_argument("n_realizations_initial must be >= 2");
  if (!(convergence_tol > 0.0 && convergence_tol < 1.0)) {
    throw std::invalid_argument("convergence_tol must lie in (0, 1)");
  }
  if (max_realizations < n_realizations_initial) {
    throw std::invalid_argument("max_realizations must be >= n_realizations_initial");
  }
  if (time_samples_per_gate < 1) throw std::invalid_argument("time_samples_per_gate must be >= 1");
}

unsigned resolve_thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CORRNOISE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<TimedState> run_ideal(const Circuit& circuit, const StateVector& initial,
                                  const std::vector<double>& static_fields, const EnsembleConfig& cfg) {
  check_inputs(circuit, initial, static_fields);
  if (cfg.time_samples_per_gate < 1) throw std::invalid_argument("time_samples_per_gate must be >= 1");
  const CircuitIntegrator integrator(circuit, cfg.gate_model, cfg.time_samples_per_gate, static_fields);
  std::vector<TimedState> out;
  out.reserve(integrator.n_samples());
  integrator.run(initial.amplitudes(), nullptr, [&](std::size_t s, const CVector& psi) {
    out.emplace_back(integrator.times()[s], StateVector::normalized(circuit.n_qubits(), psi));
  });
  return out;
}

TrajectoryReport run_ensemble(const Circuit& circuit, const StateVector& initial,
                              const std::vector<double>& static_fields, const NoiseModel& noise,
                              const EnsembleConfig& cfg, const std::optional<DfsSpec>& dfs) {
  cfg.validate();
  check_inputs(circuit, initial, static_fields);
  const int n = circuit.n_qubits();
  if (noise.n_qubits() != n) throw std::invalid_argument("noise model and circuit have different qubit counts");
  if (dfs && dfs->n_qubits() != n) throw std::invalid_argument("DFS and circuit have different qubit counts");

  const CircuitIntegrator integrator(circuit, cfg.gate_model, cfg.time_samples_per_gate, static_fields);
  const std::size_t n_times = integrator.n_samples();
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(n));

  std::vector<CVector> ideal;
  ideal.reserve(n_times);
  integrator.run(initial.amplitudes(), nullptr, [&](std::size_t, const CVector& psi) { ideal.push_back(psi); });
  const CVector& ideal_final = ideal.back();

  auto simulate_range = [&](std::size_t first, std::size_t count) {
    const std::size_t n_chunks = (count + kChunk - 1) / kChunk;
    std::vector<Accumulator> partial(n_chunks, Accumulator(n_times, dim));
    detail::parallel_chunks(n_chunks, cfg.threads, [&](std::size_t chunk) {
      Accumulator& acc = partial[chunk];
      std::vector<double> offsets(static_cast<std::size_t>(n));
      const std::size_t begin = first + chunk * kChunk;
      const std::size_t end = std::min(first + count, begin + kChunk);
      for (std::size_t r = begin; r < end; ++r) {
        noise.draw(cfg.rng_seed, r, offsets);
        const Eigen::VectorXd noise_diag = z_field_diagonal(offsets, n);
        integrator.run(initial.amplitudes(), &noise_diag, [&](std::size_t s, const CVector& psi) {
          acc.rho_sum[s].noalias() += psi * psi.adjoint();
          if (s + 1 == n_times) {
            const double inf = 1.0 - std::norm(ideal_final.dot(psi));
            acc.infidelity_sum += inf;
            acc.infidelity_sq_sum += inf * inf;
          }
        });
      }
    });
    Accumulator sum(n_times, dim);
    for (const auto& p : partial) sum += p;
    return sum;
  };

  // Realization i depends only on (seed, i), so the estimate at N/2 is a
  // prefix of the estimate at N and batches can double without resampling.
  Accumulator total(n_times, dim);
  std::size_t used = 0;
  auto add_batch = [&](std::size_t count) {
    total += simulate_range(used, count);
    used += count;
  };
  auto final_scalars = [&] {
    const CMatrix rho = total.rho_sum.back() / static_cast<double>(used);
    return std::pair{ideal_final.dot(rho * ideal_final).real(), rho.cwiseAbs2().sum()};
  };

  add_batch(cfg.n_realizations_initial / 2);
  auto prev = final_scalars();
  add_batch(cfg.n_realizations_initial - cfg.n_realizations_initial / 2);
  auto cur = final_scalars();
  bool converged = false;
  for (;;) {
    if (relative_change(prev.first, cur.first) < cfg.convergence_tol &&
        relative_change(prev.second, cur.second) < cfg.convergence_tol) {
      converged = true;
      break;
    }
    if (used * 2 > cfg.max_realizations) break;
    prev = cur;
    add_batch(used);
    cur = final_scalars();
  }

  TrajectoryReport rep;
  rep.times = integrator.times();
  rep.interval_edges = integrator.edges();
  rep.gate_model = cfg.gate_model;
  rep.rng_seed = cfg.rng_seed;
  rep.n_realizations_used = used;
  rep.converged = converged;
  const double nr = static_cast<double>(used);
  for (std::size_t s = 0; s < n_times; ++s) {
    CMatrix rho = total.rho_sum[s] / nr;
    const CVector& id = ideal[s];
    const double f = id.dot(rho * id).real();
    rep.fidelity.push_back(f);
    rep.infidelity.push_back(1.0 - f);
    rep.purity.push_back(rho.cwiseAbs2().sum());
    rep.ideal_states.emplace_back(StateVector::normalized(n, id));
    rep.d_c.push_back(d_c(rep.ideal_states.back(), noise));
    if (dfs) rep.d_g.push_back(d_g(rep.ideal_states.back(), *dfs));
    if (cfg.keep_density_matrices) rep.avg_rho.emplace_back(n, std::move(rho));
  }
  rep.integrated_d_c = trapezoid(rep.times, rep.d_c);
  if (dfs) rep.integrated_d_g = trapezoid(rep.times, rep.d_g);
  const double mean_inf = total.infidelity_sum / nr;
  const double var = std::max(total.infidelity_sq_sum / nr - mean_inf * mean_inf, 0.0) * nr / (nr - 1.0);
  rep.final_infidelity_stderr = std::sqrt(var / nr);
  return rep;
}

bool SweepGrid::all_converged() const {
  return std::all_of(cells.begin(), cells.end(),
                     [](const SweepCell& c) { return c.error.empty() && c.converged; });
}

SweepGrid sweep_rc(const Circuit& circuit, const StateVector& initial,
                   const std::vector<double>& static_fields, const std::vector<double>& r_values,
                   const std::vector<double>& c_values, double base_sigma, const EnsembleConfig& cfg) {
  if (r_values.empty() || c_values.empty()) throw std::invalid_argument("r and c lists must be non-empty");
  if (circuit.n_qubits() != 2) throw std::invalid_argument("r-c sweeps are defined for two-qubit circuits");
  EnsembleConfig cell_cfg = cfg;
  cell_cfg.keep_density_matrices = false;

  SweepGrid grid;
  grid.r_values = r_values;
  grid.c_values = c_values;
  for (double r : r_values) {
    for (double c : c_values) {
      SweepCell cell;
      cell.r = r;
      cell.c = c;
      try {
        const auto noise = NoiseModel::from_asymmetry(base_sigma, r, c);
        const auto rep = run_ensemble(circuit, initial, static_fields, noise, cell_cfg);
        cell.final_infidelity = rep.final_infidelity();
        cell.integrated_d_c = rep.integrated_d_c;
        cell.n_realizations = rep.n_realizations_used;
        cell.converged = rep.converged;
      } catch (const std::exception& e) {
        cell.error = e.what();
      }
      grid.cells.push_back(std::move(cell));
    }
  }
  return grid;
}

}  // namespace corrnoise
