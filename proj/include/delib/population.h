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

#ifndef DELIB_POPULATION_H_
#define DELIB_POPULATION_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "delib/attitude.h"
#include "delib/attitude_matrix.h"
#include "delib/random.h"

namespace delib {

// Synthetic deliberation population in a latent opinion space. Participants
// come from a Gaussian mixture, ideas sit near their author, and a
// participant approves an idea when it lies within approval_radius of them
// (with optional Gaussian noise on the distance).

struct MixtureComponent {
  double weight = 1.0;
  std::vector<double> mean;
  std::vector<std::vector<double>> cov;  // latent_dim x latent_dim, PSD
};

struct PopulationConfig {
  std::size_t n0 = 100;
  std::size_t latent_dim = 2;
  std::vector<MixtureComponent> mixture;
  double approval_radius = 1.0;
  double noise_sigma = 0.0;
  double arrival_rate = 0.0;    // Poisson mean of arrivals per round
  double departure_prob = 0.0;  // per active participant per round
  double idea_jitter = 0.1;     // std-dev of idea offset from its author
  std::uint64_t seed = 0;

  // Throws kParameter on non-positive counts or radius, negative noise,
  // probabilities outside [0, 1], a mixture that is empty, has non-positive
  // total weight, or has a mean/covariance of the wrong shape.
  void Validate() const;
};

struct SimParticipant {
  std::vector<double> position;
  std::size_t component = 0;
  bool active = true;
};

struct SimIdea {
  std::vector<double> position;
  std::size_t author = 0;
};

struct ChurnStep {
  std::vector<std::size_t> arrivals;
  std::vector<std::size_t> departures;
};

// Full-information view at one instant.
struct GroundTruth {
  // Every participant and idea, fully known, noise-free. Departed
  // participants are present but inactive.
  AttitudeMatrix matrix;
  // Per idea, fraction of active participants who approve (0 with none).
  std::vector<double> support;
  // Mixture component of each participant.
  std::vector<std::size_t> bloc;
};

class PopulationModel {
 public:
  // n0 participants drawn from the mixture. A pure function of
  // (config, seed); config.seed is not consulted.
  static PopulationModel Generate(const PopulationConfig& config, std::uint64_t seed);

  const PopulationConfig& config() const { return config_; }
  std::uint64_t seed() const { return seed_; }

  std::size_t num_participants() const { return participants_.size(); }
  std::size_t num_ideas() const { return ideas_.size(); }
  std::size_t num_active() const;
  const SimParticipant& participant(std::size_t i) const { return participants_.at(i); }
  const SimIdea& idea(std::size_t p) const { return ideas_.at(p); }

  // New idea at the author's position plus N(0, idea_jitter^2 I) noise. The
  // jitter depends only on the model seed and the new idea's index.
  std::size_t AddIdea(std::size_t author);
  std::size_t AddIdeaAt(std::vector<double> position, std::size_t author);
  // Test helper: participant at an explicit position.
  std::size_t AddParticipantAt(std::vector<double> position, std::size_t component = 0);

  double Distance(std::size_t i, std::size_t p) const;
  // Noise-free attitude.
  Attitude TrueAttitude(std::size_t i, std::size_t p) const;
  // Approve iff distance + eps < radius, eps ~ N(0, noise_sigma^2) drawn from
  // (round_seed, i, p). Never unknown.
  Attitude SampleAttitude(std::size_t i, std::size_t p, std::uint64_t round_seed) const;

  // Departures (Bernoulli per active participant, ascending) then arrivals
  // (Poisson count, positions from the mixture). Randomness depends only on
  // (seed, round).
  ChurnStep StepChurn(std::uint64_t round, std::uint64_t seed);

  GroundTruth Truth() const;

 private:
  SimParticipant Draw(Rng& rng) const;

  PopulationConfig config_;
  std::uint64_t seed_ = 0;
  std::vector<double> component_weights_;
  // Per component, a square root L of the covariance (L L' = cov), row-major.
  std::vector<std::vector<double>> factors_;
  std::vector<SimParticipant> participants_;
  std::vector<SimIdea> ideas_;
};

}  // namespace delib

#endif  // DELIB_POPULATION_H_
