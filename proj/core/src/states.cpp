// Copyright 2026 The scarsim Authors - All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "scarsim/states.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include "krylov.hpp"
#include "scarsim/errors.hpp"
#include "scarsim/hilbert.hpp"
#include "scarsim/io.hpp"
#include "scarsim/operators.hpp"

namespace scarsim {

const char* to_string(BasisTag tag) {
  switch (tag) {
    case BasisTag::constrained: return "constrained";
    case BasisTag::full: return "full";
    case BasisTag::dicke_sector: return "dicke_sector";
  }
  return "?";
}

const char* to_string(SqueezeMode mode) {
  switch (mode) {
    case SqueezeMode::none: return "none";
    case SqueezeMode::global: return "global";
    case SqueezeMode::local: return "local";
  }
  return "?";
}

void StateVector::normalize() {
  const double n = amplitudes.norm();
  if (n == 0.0) throw NumericError("cannot normalize a zero state");
  amplitudes /= n;
}

void StateVector::dump_csv(std::ostream& out) const {
  out << "# basis: " << to_string(basis_tag) << "\n";
  out << "index,re,im\n";
  for (Eigen::Index i = 0; i < amplitudes.size(); ++i) {
    out << i << ',' << fmt_full(amplitudes[i].real()) << ',' << fmt_full(amplitudes[i].imag())
        << '\n';
  }
}

double SqueezeSpec::chi_for(const BipartiteGraph& graph) const {
  switch (mode) {
    case SqueezeMode::none:
      return 0.0;
    case SqueezeMode::global:
      // xi = chi N/2, the CBG relation
      return 2.0 * xi / graph.n_vertices();
    case SqueezeMode::local:
      // xi = chi z with z the coordination number
      return xi / graph.coordination_number();
  }
  throw InvalidInputError("unknown squeeze mode");
}

double SqueezeSpec::chi_for_sector(int n_sites) const {
  if (mode == SqueezeMode::none) return 0.0;
  return 2.0 * xi / n_sites;
}

StateVector z2_state(const ConstrainedBasis& basis, Partition active) {
  const std::uint64_t mask = basis.graph().partition_mask(active);
  const auto idx = basis.index_of(mask);
  if (!idx) {
    throw Error("internal: Z2 configuration missing from a valid bipartite basis");
  }
  StateVector out;
  out.basis_tag = BasisTag::constrained;
  out.amplitudes = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.dimension()));
  out.amplitudes[static_cast<Eigen::Index>(*idx)] = 1.0;
  return out;
}

StateVector z2_state(const SpinSector& sector, Partition active) {
  StateVector out;
  out.basis_tag = BasisTag::dicke_sector;
  out.amplitudes = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(sector.dim()));
  const std::size_t idx = (active == Partition::A) ? sector.a_index(sector.ladder_length())
                                                   : sector.b_index(sector.ladder_length());
  out.amplitudes[static_cast<Eigen::Index>(idx)] = 1.0;
  return out;
}

StateVector z2_state_full(const BipartiteGraph& graph, Partition active) {
  if (graph.n_vertices() > 26) {
    throw ResourceError("full-space states are capped at 26 sites");
  }
  StateVector out;
  out.basis_tag = BasisTag::full;
  out.amplitudes =
      Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(std::size_t{1} << graph.n_vertices()));
  out.amplitudes[static_cast<Eigen::Index>(graph.partition_mask(active))] = 1.0;
  return out;
}

Eigen::VectorXcd spin_coherent_dicke(double spin, double theta, double phi) {
  if (!(spin >= 0.0) || !std::isfinite(theta) || !std::isfinite(phi)) {
    throw InvalidInputError("spin coherent state needs S >= 0 and finite angles");
  }
  const double two_s = 2.0 * spin;
  const int n = static_cast<int>(std::llround(two_s));
  if (std::abs(two_s - n) > 1e-9) {
    throw InvalidInputError("2S must be an integer");
  }
  if (theta < 0.0 || theta > std::numbers::pi) {
    throw InvalidInputError("polar angle must lie in [0, pi]");
  }
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n + 1);
  if (theta == 0.0) {
    c[0] = 1.0;
    return c;
  }
  if (theta == std::numbers::pi) {
    // exact m = +S endpoint; tan(theta/2) diverges but all weight sits here
    c[n] = std::exp(std::complex<double>(0.0, -phi * n));
    return c;
  }
  const double log_cos = std::log(std::cos(theta / 2));
  const double log_tan = std::log(std::tan(theta / 2));
  for (int j = 0; j <= n; ++j) {
    const double log_binom =
        0.5 * (std::lgamma(n + 1.0) - std::lgamma(j + 1.0) - std::lgamma(n - j + 1.0));
    const double log_mag = log_binom + n * log_cos + j * log_tan;
    c[j] = std::exp(std::complex<double>(log_mag, -phi * j));
  }
  c /= c.norm();
  return c;
}

double vacuum_overlap(double spin, double theta) {
  if (!(spin >= 0.0) || !std::isfinite(theta)) {
    throw InvalidInputError("vacuum_overlap needs S >= 0 and a finite angle");
  }
  if (theta == std::numbers::pi) return 0.0;
  return std::exp(2.0 * spin * std::log(std::cos(theta / 2)));
}

double squeezed_momentum_amplitude(double xi, double k) {
  if (!std::isfinite(xi) || !std::isfinite(k)) {
    throw InvalidInputError("squeezed_momentum_amplitude needs finite arguments");
  }
  const double pref = std::numbers::sqrt2 * std::pow(std::numbers::pi, 0.25);
  return pref * std::exp(-k * k * std::exp(2.0 * xi) / 2.0 + xi / 2.0);
}

double hp_vacuum_wavefunction(double x) {
  return std::pow(std::numbers::pi, -0.25) * std::exp(-x * x / 2.0);
}

namespace {

double estimate_operator_norm(const SparseOperator& op) {
  // a few power iterations on a fixed pseudo-random start; deterministic
  const auto n = static_cast<Eigen::Index>(op.dim());
  Eigen::VectorXcd v(n);
  std::uint64_t s = 0x9e3779b97f4a7c15ull;
  for (Eigen::Index i = 0; i < n; ++i) {
    s ^= s << 13; s ^= s >> 7; s ^= s << 17;
    v[i] = std::complex<double>((s >> 11) * 0x1.0p-53, ((s * 0x2545f4914f6cdd1dull) >> 11) * 0x1.0p-53);
  }
  v.normalize();
  Eigen::VectorXcd w(n);
  double est = 0.0;
  for (int it = 0; it < 6; ++it) {
    op.apply(v, w);
    est = w.norm();
    if (est == 0.0) return 0.0;
    v = w / est;
  }
  return est;
}

}  // namespace

StateVector apply_exp_generator(const SparseOperator& generator, const StateVector& state,
                                const ExpApplyOptions& opts) {
  if (generator.hermiticity() != Hermiticity::anti_hermitian) {
    throw InvalidInputError("apply_exp_generator requires an anti-Hermitian generator");
  }
  if (generator.dim() != state.dim()) {
    throw InvalidInputError("generator/state dimension mismatch");
  }
  if (generator.basis_tag() != state.basis_tag) {
    throw InvalidInputError("generator/state basis mismatch");
  }
  const double norm_in = state.norm();
  StateVector out;
  out.basis_tag = state.basis_tag;

  if (opts.method == ExpMethod::krylov) {
    // exp(G) = exp(i M) with M = -i G Hermitian
    detail::ApplyRef apply_m = [&generator](const Eigen::VectorXcd& in, Eigen::VectorXcd& o) {
      generator.apply(in, o);
      o *= std::complex<double>(0.0, -1.0);
    };
    out.amplitudes =
        detail::expv_hermitian(apply_m, state.amplitudes, -1.0, opts.tol, opts.krylov_dim);
  } else {
    const double norm_est = estimate_operator_norm(generator);
    long substeps = std::max<long>(1, static_cast<long>(std::ceil(norm_est * 1.25)));
    constexpr int kMaxTerms = 64;
    for (;;) {
      Eigen::VectorXcd cur = state.amplitudes;
      Eigen::VectorXcd term, tmp;
      bool ok = true;
      for (long step = 0; step < substeps && ok; ++step) {
        Eigen::VectorXcd acc = cur;
        term = cur;
        int n = 0;
        double rel = 1.0;
        while (rel > opts.tol) {
          if (++n > kMaxTerms) {
            ok = false;
            break;
          }
          generator.apply(term, tmp);
          term = tmp / (static_cast<double>(substeps) * n);
          acc += term;
          const double an = acc.norm();
          rel = an > 0.0 ? term.norm() / an : 0.0;
        }
        cur = std::move(acc);
      }
      if (ok) {
        out.amplitudes = std::move(cur);
        break;
      }
      substeps *= 2;
      if (substeps > (1L << 24)) {
        throw NumericError("exponential series failed to converge");
      }
    }
  }

  const double drift = std::abs(out.amplitudes.norm() - norm_in);
  if (drift > 1e-10 * std::max(1.0, norm_in)) {
    throw NumericError("exponential map lost unitarity; norm drift " + std::to_string(drift));
  }
  return out;
}

}  // namespace scarsim
