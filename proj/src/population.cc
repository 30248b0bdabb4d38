// Copyright 2026 The Authors.
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

#include "delib/population.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "delib/error.h"

namespace delib {

namespace {

void Fail(const std::string& what) {
  throw Error(ErrorCode::kParameter, "population config: " + what);
}

bool Finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

// Symmetric square root through the eigendecomposition, which also accepts
// singular (e.g. all-zero) covariances where a Cholesky factor would not exist.
std::vector<double> CovarianceFactor(const std::vector<std::vector<double>>& cov,
                                     std::size_t dim) {
  Eigen::MatrixXd c(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t s = 0; s < dim; ++s) c(r, s) = 0.5 * (cov[r][s] + cov[s][r]);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(c);
  const Eigen::VectorXd values = eig.eigenvalues();
  if (values.minCoeff() < -1e-9 * std::max(1.0, values.cwiseAbs().maxCoeff())) {
    Fail("covariance is not positive semidefinite");
  }
  const Eigen::MatrixXd root = eig.eigenvectors() *
                               values.cwiseMax(0.0).cwiseSqrt().asDiagonal() *
                               eig.eigenvectors().transpose();
  std::vector<double> out(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t s = 0; s < dim; ++s) out[r * dim + s] = root(r, s);
  }
  return out;
}

// Tags for independent random streams.
constexpr std::uint64_t kStreamInitial = 0x696e6974;
constexpr std::uint64_t kStreamIdea = 0x69646561;
constexpr std::uint64_t kStreamChurn = 0x636875726e;
constexpr std::uint64_t kStreamNoise = 0x6e6f697365;

}  // namespace

void PopulationConfig::Validate() const {
  if (n0 == 0) Fail("n0 must be positive");
  if (latent_dim == 0) Fail("latent_dim must be positive");
  if (!(approval_radius > 0.0) || !std::isfinite(approval_radius)) {
    Fail("approval_radius must be positive");
  }
  if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma)) {
    Fail("noise_sigma must be non-negative");
  }
  if (!(arrival_rate >= 0.0) || !std::isfinite(arrival_rate)) {
    Fail("arrival_rate must be non-negative");
  }
  if (!(departure_prob >= 0.0 && departure_prob <= 1.0)) {
    Fail("departure_prob must lie in [0, 1]");
  }
  if (!(idea_jitter >= 0.0) || !std::isfinite(idea_jitter)) {
    Fail("idea_jitter must be non-negative");
  }
  if (mixture.empty()) Fail("mixture has no components");
  double total = 0.0;
  for (const MixtureComponent& c : mixture) {
    if (!(c.weight >= 0.0) || !std::isfinite(c.weight)) Fail("negative component weight");
    total += c.weight;
    if (c.mean.size() != latent_dim || !Finite(c.mean)) {
      Fail(fmt::format("component mean must have {} finite entries", latent_dim));
    }
    if (c.cov.size() != latent_dim) Fail("covariance has the wrong shape");
    for (const auto& row : c.cov) {
      if (row.size() != latent_dim || !Finite(row)) Fail("covariance has the wrong shape");
    }
  }
  if (!(total > 0.0)) Fail("mixture weights sum to zero");
}

PopulationModel PopulationModel::Generate(const PopulationConfig& config,
                                          std::uint64_t seed) {
  config.Validate();
  PopulationModel model;
  model.config_ = config;
  model.seed_ = seed;
  for (const MixtureComponent& c : config.mixture) {
    model.component_weights_.push_back(c.weight);
    model.factors_.push_back(CovarianceFactor(c.cov, config.latent_dim));
  }
  Rng rng = MakeRng(seed, {kStreamInitial});
  for (std::size_t i = 0; i < config.n0; ++i) model.participants_.push_back(model.Draw(rng));
  return model;
}

SimParticipant PopulationModel::Draw(Rng& rng) const {
  std::discrete_distribution<std::size_t> pick(component_weights_.begin(),
                                               component_weights_.end());
  std::normal_distribution<double> normal(0.0, 1.0);
  const std::size_t dim = config_.latent_dim;
  SimParticipant p;
  p.component = pick(rng);
  std::vector<double> z(dim);
  for (double& x : z) x = normal(rng);
  p.position = config_.mixture[p.component].mean;
  const auto& factor = factors_[p.component];
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t s = 0; s < dim; ++s) p.position[r] += factor[r * dim + s] * z[s];
  }
  return p;
}

std::size_t PopulationModel::num_active() const {
  return static_cast<std::size_t>(std::count_if(
      participants_.begin(), participants_.end(),
      [](const SimParticipant& p) { return p.active; }));
}

std::size_t PopulationModel::AddIdea(std::size_t author) {
  const SimParticipant& who = participants_.at(author);
  Rng rng = MakeRng(seed_, {kStreamIdea, ideas_.size()});
  std::normal_distribution<double> jitter(0.0, 1.0);
  std::vector<double> position = who.position;
  for (double& x : position) x += config_.idea_jitter * jitter(rng);
  return AddIdeaAt(std::move(position), author);
}

std::size_t PopulationModel::AddIdeaAt(std::vector<double> position, std::size_t author) {
  if (position.size() != config_.latent_dim) {
    throw Error(ErrorCode::kParameter, "idea position has the wrong dimension");
  }
  ideas_.push_back({std::move(position), author});
  return ideas_.size() - 1;
}

std::size_t PopulationModel::AddParticipantAt(std::vector<double> position,
                                              std::size_t component) {
  if (position.size() != config_.latent_dim) {
    throw Error(ErrorCode::kParameter, "participant position has the wrong dimension");
  }
  participants_.push_back({std::move(position), component, true});
  return participants_.size() - 1;
}

double PopulationModel::Distance(std::size_t i, std::size_t p) const {
  const auto& a = participants_.at(i).position;
  const auto& b = ideas_.at(p).position;
  double sum = 0.0;
  for (std::size_t t = 0; t < a.size(); ++t) sum += (a[t] - b[t]) * (a[t] - b[t]);
  return std::sqrt(sum);
}

Attitude PopulationModel::TrueAttitude(std::size_t i, std::size_t p) const {
  return Distance(i, p) < config_.approval_radius ? Attitude::kApprove
                                                  : Attitude::kDisapprove;
}

Attitude PopulationModel::SampleAttitude(std::size_t i, std::size_t p,
                                         std::uint64_t round_seed) const {
  double eps = 0.0;
  if (config_.noise_sigma > 0.0) {
    Rng rng = MakeRng(round_seed, {kStreamNoise, i, p});
    eps = std::normal_distribution<double>(0.0, config_.noise_sigma)(rng);
  }
  return Distance(i, p) + eps < config_.approval_radius ? Attitude::kApprove
                                                        : Attitude::kDisapprove;
}

ChurnStep PopulationModel::StepChurn(std::uint64_t round, std::uint64_t seed) {
  Rng rng = MakeRng(seed, {kStreamChurn, round});
  ChurnStep step;
  if (config_.departure_prob > 0.0) {
    std::bernoulli_distribution leave(config_.departure_prob);
    for (std::size_t i = 0; i < participants_.size(); ++i) {
      if (!participants_[i].active) continue;
      if (leave(rng)) {
        participants_[i].active = false;
        step.departures.push_back(i);
      }
    }
  }
  if (config_.arrival_rate > 0.0) {
    const int arrivals = std::poisson_distribution<int>(config_.arrival_rate)(rng);
    for (int a = 0; a < arrivals; ++a) {
      participants_.push_back(Draw(rng));
      step.arrivals.push_back(participants_.size() - 1);
    }
  }
  return step;
}

GroundTruth PopulationModel::Truth() const {
  GroundTruth truth;
  for (std::size_t i = 0; i < participants_.size(); ++i) {
    truth.matrix.AddParticipant();
    truth.bloc.push_back(participants_[i].component);
  }
  for (const SimIdea& idea : ideas_) {
    truth.matrix.AddIdea("", ParticipantId(static_cast<std::uint32_t>(idea.author)));
  }
  const std::size_t active = num_active();
  std::vector<std::size_t> approvals(ideas_.size(), 0);
  for (std::size_t i = 0; i < participants_.size(); ++i) {
    const ParticipantId pid(static_cast<std::uint32_t>(i));
    for (std::size_t p = 0; p < ideas_.size(); ++p) {
      const Attitude a = TrueAttitude(i, p);
      truth.matrix.RecordAttitude(pid, IdeaId(static_cast<std::uint32_t>(p)), a);
      if (participants_[i].active && a == Attitude::kApprove) ++approvals[p];
    }
    if (!participants_[i].active) truth.matrix.Deactivate(pid);
  }
  truth.support.resize(ideas_.size(), 0.0);
  if (active > 0) {
    for (std::size_t p = 0; p < ideas_.size(); ++p) {
      truth.support[p] = static_cast<double>(approvals[p]) / static_cast<double>(active);
    }
  }
  return truth;
}

}  // namespace delib
