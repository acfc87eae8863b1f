// Copyright 2026 The cpc-codes Authors
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


#include "cpc/search.h"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <thread>

#include "cpc/decoding.h"
#include "cpc/rng.h"

namespace cpc {

namespace {

Gf2Matrix random_matrix(size_t rows, size_t cols, std::mt19937_64 &rng) {
  Gf2Matrix m(rows, cols);
  for (size_t r = 0; r < rows; r++) {
    for (size_t c = 0; c < cols; c++) {
      m.set(r, c, rng() & 1);
    }
  }
  return m;
}

}  // namespace

CpcCode random_code(size_t k, size_t n_b, size_t n_p, std::mt19937_64 &rng, bool mirror_bp) {
  if (mirror_bp && n_b != n_p) {
    throw std::invalid_argument("random_code: mirror_bp needs equal bit and phase check counts");
  }
  Gf2Matrix mb = random_matrix(k, n_b, rng);
  Gf2Matrix mp = mirror_bp ? mb : random_matrix(k, n_p, rng);
  Gf2Matrix mc = random_matrix(n_b, n_p, rng);
  return make_code(mb, mp, mc);
}

bool search_predicate_holds(const SearchConfig &config, const CpcCode &code) {
  if (config.predicate == SearchPredicate::kCnotCompatible) {
    return cnot_compatible(code, config.control, config.target).ok;
  }
  return is_single_error_correcting(AnyCode(code)).ok;
}

SearchResult search(const SearchConfig &config) {
  if (config.k + config.n_b + config.n_p > 64) {
    throw std::invalid_argument("search: at most 64 qubits");
  }
  if (config.mirror_bp && config.n_b != config.n_p) {
    throw std::invalid_argument("search: mirror_bp needs equal bit and phase check counts");
  }
  if (config.predicate == SearchPredicate::kCnotCompatible &&
      (config.control >= config.k || config.target >= config.k || config.control == config.target)) {
    throw std::invalid_argument("search: CNOT control and target must be distinct data qubits");
  }
  size_t workers = std::max<size_t>(1, config.threads);
  std::vector<std::vector<FoundCode>> found(workers);
  std::vector<uint64_t> counts(workers, 0);
  std::vector<std::exception_ptr> failures(workers);
  auto work = [&](size_t w) {
    try {
      for (uint64_t t = w; t < config.budget; t += workers) {
        std::mt19937_64 rng = stream_rng(config.seed, t);
        CpcCode code = random_code(config.k, config.n_b, config.n_p, rng, config.mirror_bp);
        if (search_predicate_holds(config, code)) {
          counts[w]++;
          // Each worker sees ascending trials, so its first `cap` hits contain
          // every hit that can survive the merge.
          if (found[w].size() < config.cap) {
            found[w].push_back({t, std::move(code)});
          }
        }
      }
    } catch (...) {
      failures[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; w++) {
      pool.emplace_back(work, w);
    }
    for (auto &th : pool) {
      th.join();
    }
  }
  for (auto &f : failures) {
    if (f) {
      std::rethrow_exception(f);
    }
  }
  SearchResult result;
  for (size_t w = 0; w < workers; w++) {
    result.successes += counts[w];
    for (auto &f : found[w]) {
      result.codes.push_back(std::move(f));
    }
  }
  std::sort(result.codes.begin(), result.codes.end(),
            [](const FoundCode &a, const FoundCode &b) { return a.trial < b.trial; });
  if (result.codes.size() > config.cap) {
    result.codes.resize(config.cap);
  }
  result.trials = config.budget;
  result.success_rate = config.budget == 0 ? 0 : double(result.successes) / double(config.budget);
  return result;
}

}  // namespace cpc
