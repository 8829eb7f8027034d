#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "los/instance.hpp"
#include "los/options.hpp"

namespace los {

/// Advertisement scheduling: k clients over n time points. A client may air
/// only at available times, its airings must be >= omega apart, and at most
/// `capacity` clients air at any one time. Maximizes the total weight of
/// airings (weight 1 each unless given).
class AdsInstance {
 public:
  AdsInstance(int clients, int times, int omega, int capacity);

  int clients() const { return clients_; }
  int times() const { return times_; }
  int omega() const { return omega_; }
  int capacity() const { return capacity_; }

  /// client in 1..clients, time in 1..times.
  bool available(int client, int time) const { return available_[index(client, time)] != 0; }
  void set_available(int client, int time, bool on);
  const Rational& weight(int client, int time) const { return weights_[index(client, time)]; }
  void set_weight(int client, int time, Rational w);
  bool has_custom_weights() const;

 private:
  std::size_t index(int client, int time) const;

  int clients_;
  int times_;
  int omega_;
  int capacity_;
  std::vector<std::uint8_t> available_;
  std::vector<Rational> weights_;
};

// .ads text format:
//
//   ads v1
//   clients=<k> times=<n> omega=<omega> l=<l>
//   a <0/1 string of length n>        (one line per client, in order)
//   w <client> <time> <weight>        (optional)
AdsInstance parse_ads(std::istream& in);
AdsInstance parse_ads(const std::string& text);
AdsInstance read_ads_file(const std::string& path);
std::string serialize_ads(const AdsInstance& ads);

/// Optimal schedule through the window DP with the capacity rule set.
/// Solution vertices are (client, time) pairs.
Solution solve_adssched(const AdsInstance& ads, const SolverOptions& options = {});

}  // namespace los
