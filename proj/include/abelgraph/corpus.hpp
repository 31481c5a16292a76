#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "abelgraph/dual_graph.hpp"

namespace abelgraph {

// Recipe for a reproducible batch of random stable graphs. The same spec
// always yields byte-identical graphs, across platforms: every draw goes
// through the raw engine output, never through library distributions.
struct CorpusSpec {
    uint64_t seed = 1;
    int count = 100;
    int genus_min = 2;
    int genus_max = 6;
    int vertices_min = 1;
    int vertices_max = 8;
    int edge_cap = 24;
    double loop_probability = 0.15;
};

void validate_corpus_spec(const CorpusSpec& spec);  // SpecError on nonsense

DualGraph random_stable_graph(std::mt19937_64& rng, const CorpusSpec& spec);

std::vector<DualGraph> generate_corpus(const CorpusSpec& spec);

struct SuiteCheck {
    std::string name;
    bool pass = false;
    std::string detail;  // counts on success, the first offender on failure
};

// Structural identities every graph must satisfy, aggregated over a batch.
// Meant for generated corpora but runs on any list of graphs small enough
// to enumerate.
std::vector<SuiteCheck> run_invariant_suite(const std::vector<DualGraph>& graphs);

bool suite_passed(const std::vector<SuiteCheck>& checks);

}  // namespace abelgraph
