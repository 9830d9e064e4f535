#include "phylosemi/atlas.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "phylosemi/families.hpp"
#include "phylosemi/generators.hpp"

namespace phylosemi {

std::string atlas_header() { return "family,params,betti,edges,max_degree,cap_hit,wall_ms"; }

std::string atlas_csv(const AtlasRow& row) {
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.1f", row.wall_ms);
  std::ostringstream os;
  os << row.family << ',' << row.param << ',' << row.betti << ',' << row.edges << ',' << row.max_degree << ','
     << (row.cap_hit ? "true" : "false") << ',' << ms;
  return os.str();
}

AtlasRow atlas_row(const std::string& name, int param, std::optional<int> cap) {
  const int params[] = {param};
  Graph g = family(name, params);
  auto start = std::chrono::steady_clock::now();
  MaxDegree m = max_generator_degree(g, cap.value_or(default_cap(g)));
  auto stop = std::chrono::steady_clock::now();
  return {name,
          param,
          first_betti_number(g),
          static_cast<int>(g.num_edges()),
          m.max_degree,
          m.cap_hit,
          std::chrono::duration<double, std::milli>(stop - start).count()};
}

void run_atlas(const std::string& name, int a, int b, std::optional<int> cap, unsigned threads,
               const std::vector<int>& skip, const std::function<void(const AtlasRow&)>& emit) {
  std::vector<int> params;
  for (int p = a; p <= b; ++p)
    if (std::find(skip.begin(), skip.end(), p) == skip.end()) params.push_back(p);
  if (params.empty()) return;
  // Constructing the first graph up front surfaces bad names and params on the caller's thread.
  {
    const int first[] = {params.front()};
    family(name, first);
  }

  std::mutex mu;
  std::condition_variable cv;
  std::map<std::size_t, AtlasRow> done;
  std::exception_ptr failure;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i; (i = next++) < params.size();) {
      try {
        AtlasRow row = atlas_row(name, params[i], cap);
        std::lock_guard lock(mu);
        done.emplace(i, std::move(row));
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        done.emplace(i, AtlasRow{});
      }
      cv.notify_all();
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, params.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);

  for (std::size_t i = 0; i < params.size(); ++i) {
    AtlasRow row;
    {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return done.contains(i); });
      if (failure) break;
      row = done.at(i);
    }
    emit(row);
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace phylosemi
