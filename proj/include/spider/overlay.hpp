#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "spider/engine.hpp"
#include "spider/graph.hpp"
#include "spider/types.hpp"

namespace spider {

/// The first n primes, in order.
std::vector<std::uint64_t> first_primes(std::size_t n);

/// Injective vertex -> prime map; the i-th vertex in ascending id order gets
/// the i-th prime.
struct PrimeLabeling {
  std::vector<std::string> order;  // ascending vertex ids
  std::map<std::string, std::uint64_t> prime_of;

  std::uint64_t prime(const std::string& vertex) const;
  /// Product of every vertex prime (the Hamiltonian cycle target).
  BigInt full_product() const;
};

PrimeLabeling assign_primes(const Graph& graph);

/// A graph mapped onto a relay network: one prime_vertex relay per vertex,
/// one opposite-direction array pair per edge with length equal to weight.
struct Overlay {
  Topology topology;
  PrimeLabeling labeling;
  std::vector<std::string> vertex_of_relay;        // relay id == index
  std::map<std::string, RelayId> relay_of_vertex;

  RelayId relay(const std::string& vertex) const;
  const std::string& vertex(RelayId id) const;
  /// Ids of the arrays leaving a vertex (injection targets).
  std::vector<ArrayId> arrays_from(const std::string& vertex) const;
};

Overlay build_overlay(const Graph& graph, const PrimeLabeling& labeling);

/// Unique vertex set S with amplitude == product of primes over S.
/// Throws on non-squarefree amplitudes or foreign prime factors.
std::set<std::string> factor_amplitude(const BigInt& amplitude,
                                       const PrimeLabeling& labeling);

/// Characteristic bit string of factor_amplitude, in vertex-id order.
std::string visited_bits(const BigInt& amplitude,
                         const PrimeLabeling& labeling);

}  // namespace spider
