#include "cartierlab/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "cartierlab/parse.hpp"
#include "cartierlab/report.hpp"

namespace cartierlab {

int default_jobs() {
  if (const char* env = std::getenv("CARTIER_LAB_JOBS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

RatFun random_reduced_curve(std::mt19937_64& rng, std::uint64_t p, std::int64_t max_total_break,
                            bool allow_polynomial) {
  std::int64_t ip = static_cast<std::int64_t>(p);
  auto rand_below = [&](std::int64_t n) {
    return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
  };
  auto random_break = [&](std::int64_t cap) {
    std::int64_t d;
    do {
      d = 1 + rand_below(cap);
    } while (d % ip == 0);
    return d;
  };

  bool polynomial = allow_polynomial && rand_below(4) == 0;
  RatFun f(p);
  if (polynomial) {
    std::int64_t d = random_break(max_total_break);
    Poly g(p);
    g.add_term(Fp(1 + rand_below(ip - 1), p), d);
    for (std::int64_t e = 1; e < d; ++e) {
      if (e % ip == 0) continue;
      g.add_term(Fp(rand_below(ip), p), e);
    }
    f = RatFun(g);
  } else {
    std::int64_t max_centers = std::min<std::int64_t>(ip, 3);
    std::int64_t r = 1 + rand_below(max_centers);
    std::vector<std::int64_t> centers(static_cast<std::size_t>(ip));
    std::iota(centers.begin(), centers.end(), 0);
    for (std::size_t k = 0; k < static_cast<std::size_t>(r); ++k) {
      std::size_t pick = static_cast<std::size_t>(k) +
                         static_cast<std::size_t>(rand_below(static_cast<std::int64_t>(centers.size() - k)));
      std::swap(centers[k], centers[pick]);
    }
    std::int64_t budget = max_total_break;
    for (std::int64_t k = 0; k < r && budget > 0; ++k) {
      std::int64_t d = random_break(std::max<std::int64_t>(1, budget - (r - 1 - k)));
      budget -= d;
      Fp center(centers[static_cast<std::size_t>(k)], p);
      RatFun pole(p);
      Poly lin = Poly::variable(p) - Poly(center);
      pole = pole + RatFun(Poly(Fp(1 + rand_below(ip - 1), p)), lin.pow(static_cast<std::uint64_t>(d)));
      for (std::int64_t e = 1; e < d; ++e) {
        if (e % ip == 0) continue;
        std::int64_t c = rand_below(ip);
        if (c == 0) continue;
        pole = pole + RatFun(Poly(Fp(c, p)), lin.pow(static_cast<std::uint64_t>(e)));
      }
      f = f + pole;
    }
  }
  return f;
}

namespace {

struct SweepTask {
  std::size_t index;
  std::string f_text;
};

std::string sweep_row(const SweepOptions& opt, const SweepTask& task) {
  std::ostringstream os;
  os << task.index << "," << opt.p << "," << task.f_text << ",";
  try {
    RatFun f = parse_f(task.f_text, opt.p);
    ReportRecord r = analyze_curve(opt.p, f, task.f_text, opt.n_max);
    std::ostringstream prof, ls, us;
    for (std::size_t i = 0; i < r.a_profile.size(); ++i) {
      if (i) {
        prof << ";";
        ls << ";";
        us << ";";
      }
      prof << r.a_profile[i];
      ls << r.bounds.rows[i].L_combined;
      us << r.bounds.rows[i].U_capped;
    }
    os << r.genus << "," << r.p_rank << "," << r.g_minus_s << "," << prof.str() << "," << ls.str()
       << "," << us.str() << "," << (r.sandwich_ok ? 1 : 0) << ",";
  } catch (const BoundViolation&) {
    throw;  // theorem-falsifying; abort the whole run
  } catch (const Error& e) {
    std::string msg = e.what();
    for (char& c : msg) {
      if (c == ',' || c == '\n') c = ';';
    }
    os << ",,,,,,0," << msg;
  }
  os << "\n";
  return os.str();
}

}  // namespace

void run_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& diag) {
  std::vector<SweepTask> tasks;
  if (opt.mode == SweepOptions::Mode::FamilyPole) {
    if (opt.family_d < 1 || opt.family_d % static_cast<std::int64_t>(opt.p) == 0) {
      throw Error("family pole order must be >= 1 and coprime to p");
    }
    std::int64_t count = 1;
    for (std::int64_t k = 1; k < opt.family_d; ++k) {
      count *= static_cast<std::int64_t>(opt.p);
      if (count > 2'000'000) throw Error("family sweep too large; reduce d or p");
    }
    for (std::int64_t idx = 0; idx < count; ++idx) {
      // Lexicographic coefficient tuples (c_{d-1}, ..., c_1), c_{d-1} outermost.
      std::ostringstream f;
      f << "x^-" << opt.family_d;
      std::int64_t rest = idx;
      for (std::int64_t k = opt.family_d - 1; k >= 1; --k) {
        std::int64_t divisor = 1;
        for (std::int64_t t = 1; t < k; ++t) divisor *= static_cast<std::int64_t>(opt.p);
        std::int64_t c = (rest / divisor) % static_cast<std::int64_t>(opt.p);
        if (c != 0) f << " + " << c << "*x^-" << k;
      }
      tasks.push_back(SweepTask{static_cast<std::size_t>(idx), f.str()});
    }
  } else {
    std::mt19937_64 rng(opt.seed);
    for (std::int64_t idx = 0; idx < opt.random_count; ++idx) {
      RatFun f = random_reduced_curve(rng, opt.p, opt.max_total_break, opt.allow_polynomial_shape);
      tasks.push_back(SweepTask{static_cast<std::size_t>(idx), print_f(f)});
    }
  }

  diag << "sweep: " << tasks.size() << " curves over F_" << opt.p << "\n";

  std::vector<std::string> rows(tasks.size());
  int jobs = opt.jobs > 0 ? opt.jobs : default_jobs();
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size() == 0 ? 1 : tasks.size())));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        rows[i] = sweep_row(opt, tasks[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  out << "index,p,f,genus,p_rank,g_minus_s,a_profile,L_profile,U_profile,sandwich_ok,error\n";
  for (const auto& row : rows) out << row;
}

}  // namespace cartierlab
