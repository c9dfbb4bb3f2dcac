// Copyright 2026 The iPFL Simulator Authors.
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

#ifndef IPFL_DOMAIN_HPP_
#define IPFL_DOMAIN_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ipfl {

// Model parameters, one flat vector per client; dimension is shared by all
// clients of a simulation.
using ParamVector = std::vector<double>;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Budget balance and social-welfare bookkeeping tolerance.
constexpr double kLedgerTol = 1e-9;

// Square dense matrix of doubles, row major.
class RealMatrix {
 public:
  RealMatrix() = default;
  explicit RealMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0.0) {}

  int size() const { return n_; }
  double& at(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  double at(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  double row_sum(int i) const {
    double s = 0.0;
    for (int j = 0; j < n_; ++j) s += at(i, j);
    return s;
  }
  double col_sum(int j) const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i) s += at(i, j);
    return s;
  }

 private:
  int n_ = 0;
  std::vector<double> data_;
};

// Directed collaboration graph A: at(i, j) == 1 iff client i imports client
// j's model this round. The diagonal is always zero.
class CollabGraph {
 public:
  CollabGraph() = default;
  explicit CollabGraph(int m) : m_(m), a_(static_cast<std::size_t>(m) * m, 0) {}

  int size() const { return m_; }
  bool at(int i, int j) const { return a_[static_cast<std::size_t>(i) * m_ + j] != 0; }
  void set(int i, int j, bool v) { a_[static_cast<std::size_t>(i) * m_ + j] = v ? 1 : 0; }

  std::span<const std::uint8_t> row(int i) const {
    return {a_.data() + static_cast<std::size_t>(i) * m_, static_cast<std::size_t>(m_)};
  }
  void set_row(int i, std::span<const std::uint8_t> r) {
    for (int j = 0; j < m_; ++j) a_[static_cast<std::size_t>(i) * m_ + j] = r[j];
  }

  int out_degree(int i) const {
    int d = 0;
    for (int j = 0; j < m_; ++j) d += at(i, j) ? 1 : 0;
    return d;
  }
  int in_degree(int j) const {
    int d = 0;
    for (int i = 0; i < m_; ++i) d += at(i, j) ? 1 : 0;
    return d;
  }

  void clear_client(int k) {  // removes every edge touching k
    for (int j = 0; j < m_; ++j) set(k, j, false);
    for (int i = 0; i < m_; ++i) set(i, k, false);
  }

  bool operator==(const CollabGraph& other) const = default;

 private:
  int m_ = 0;
  std::vector<std::uint8_t> a_;
};

// One round of money flow: remittances.at(i, j) is what i pays j, and
// net_bills[i] = sum_j r_ij - sum_j r_ji. Bills sum to zero.
struct PaymentLedger {
  RealMatrix remittances;
  std::vector<double> net_bills;
};

enum class Role { kTrader, kBuyer, kSeller, kAttacker };

const char* role_name(Role role);
std::optional<Role> role_from_name(const std::string& name);

struct Dishonesty {
  enum class Target { kDataSize, kCost };
  Target target = Target::kDataSize;
  double ratio = 1.0;  // reported value = ratio * true value
};

// A client's public market declaration plus its private behavior knobs.
// data_size is real-valued so that inflated reports can be represented;
// honest configurations use integral values. cost == +inf marks a pure
// buyer whose model is never for sale.
struct ClientProfile {
  int id = 0;
  double data_size = 1.0;   // N_i
  double cost = 0.0;        // c_i, may be +inf
  double eagerness = 0.0;   // K_i
  Role role = Role::kTrader;
  std::optional<Dishonesty> dishonesty;
};

struct LearnerSpec {
  enum class Kind { kSoftmaxLinear };
  Kind kind = Kind::kSoftmaxLinear;
  int classes = 2;
  int feature_dim = 2;
  int steps = 10;           // full-batch gradient steps per round
  double learn_rate = 0.5;
  double l2 = 1e-3;

  int dim() const { return classes * (feature_dim + 1); }  // weights + bias
};

struct DataSpec {
  enum class Mode { kDirichlet, kCluster };
  Mode mode = Mode::kCluster;
  double beta = 0.1;          // dirichlet concentration
  long pool_per_class = 0;    // dirichlet shared pool size; 0 = auto-size
  int clusters = 1;
  int test_points = 100;      // held-out points per client
  double noise = 1.0;         // class-conditional stddev
  double mean_separation = 3.0;
  std::vector<int> assignments;  // client -> cluster; empty = contiguous blocks
};

struct AttackSpec {
  enum class Kind { kShuffle, kSignFlip, kConstant, kGaussian };
  Kind kind = Kind::kGaussian;
  double magnitude = 1.0;  // constant fill value or gaussian stddev
};

const char* attack_name(AttackSpec::Kind kind);
std::optional<AttackSpec::Kind> attack_from_name(const std::string& name);

struct QuitPolicy {
  enum class Kind { kSolvent, kMyopic, kQuitAt };
  Kind kind = Kind::kSolvent;
  int client = -1;  // kQuitAt only
  int round = -1;   // kQuitAt only
};

struct SimConfig {
  std::vector<ClientProfile> clients;
  double lambda = 1.0;            // model-difference weight
  std::optional<double> eta;      // prox step size; unset = per-client auto
  int rounds = 1;                 // T, including the warmup round
  std::uint64_t seed = 0;
  LearnerSpec learner;
  DataSpec data;
  std::optional<AttackSpec> attack;  // applied to attacker-role clients
  bool distance_normalized = false;
  QuitPolicy quit_policy;
};

// Auto prox step size for client i: 0.5 * N_i / max(1, sum_j N_j), computed
// from reported sizes. Keeps the prox center inside the convex hull of the
// participating models.
double auto_eta(double own_size, double total_size);

struct ConfigError {
  enum class Code {
    kNonPositiveDataSize,
    kNegativeCost,
    kNegativeEagerness,
    kRoleCostMismatch,
    kBadDimension,
    kBadValue,
  };
  Code code;
  std::string message;
};

const char* config_error_name(ConfigError::Code code);

// Returns every violated invariant; an empty list means the config is valid.
std::vector<ConfigError> validate_config(const SimConfig& config);

// Per-round audit trail.
struct RoundReport {
  int round = 0;
  CollabGraph graph;
  PaymentLedger ledger;
  std::vector<double> utilities;
  double social_welfare = 0.0;
  std::vector<double> gains;
  std::vector<double> accuracies;
  std::vector<std::uint8_t> quit_flags;
};

}  // namespace ipfl

#endif  // IPFL_DOMAIN_HPP_
