// Command-line front end. Talks to the engine exclusively through the C API
// in schubert.h; all results are JSON on stdout, diagnostics are JSON on
// stderr. Exit codes: 0 ok, 1 failed acceptance run, 2 domain error,
// 64 usage error, 65 malformed input.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "schubert.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitDomain = 2;
constexpr int kExitUsage = 64;
constexpr int kExitBadInput = 65;

struct Options {
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string manifest_path;
};

int thread_cap() {
  if (const char* env = std::getenv("SCHUBERT_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

[[noreturn]] void fail(int code, const std::string& message) {
  std::cerr << json{{"error", message}}.dump() << "\n";
  std::exit(code);
}

int status_to_exit(schub_status st) {
  switch (st) {
    case SCHUB_OK:
      return kExitOk;
    case SCHUB_ERROR_PARSE:
      return kExitBadInput;
    case SCHUB_ERROR_DOMAIN:
      return kExitDomain;
    default:
      return kExitDomain;
  }
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  schub_string_free(s);
  return out;
}

// parses "1,1,1,1" into integers
std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      fail(kExitBadInput, "cannot parse " + what + " '" + text + "'");
    }
  }
  if (out.empty()) fail(kExitBadInput, what + " must be a nonempty comma list");
  return out;
}

// parses "(1,0),(2,1)" or JSON [[1,0],[2,1]] into a JSON array of arrays
std::string parse_class_list(const std::string& text) {
  if (!text.empty() && text.front() == '[') return text;
  json out = json::array();
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') {
      if (depth++ == 0) {
        cur.clear();
        continue;
      }
    }
    if (ch == ')') {
      if (--depth == 0) {
        json pair = json::array();
        std::stringstream ss(cur);
        std::string item;
        while (std::getline(ss, item, ','))
          try {
            pair.push_back(std::stoi(item));
          } catch (const std::exception&) {
            fail(kExitBadInput, "cannot parse class list '" + text + "'");
          }
        out.push_back(pair);
        continue;
      }
    }
    if (depth == 1) cur.push_back(ch);
  }
  if (depth != 0 || out.empty()) fail(kExitBadInput, "cannot parse class list '" + text + "'");
  return out.dump();
}

// parses "[1,0],[0,1]" (or full JSON) into a JSON array of pairs
std::string parse_point_list(const std::string& text) {
  std::string wrapped = text;
  if (text.empty() || text.front() != '[' || text.find("],") != std::string::npos ||
      text.find("[[") != 0)
    wrapped = "[" + text + "]";
  const json j = json::parse(wrapped, nullptr, false);
  if (j.is_discarded()) fail(kExitBadInput, "cannot parse point list '" + text + "'");
  return j.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(kExitBadInput, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// prints the result, writes the manifest when requested, exits
[[noreturn]] void finish(const Options& opt, const std::string& subcommand, const json& params,
                         const std::string& result_json,
                         std::chrono::steady_clock::time_point start, int exit_code = kExitOk) {
  std::cout << result_json << "\n";
  if (!opt.manifest_path.empty()) {
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    const json manifest{{"subcommand", subcommand},
                        {"params", params},
                        {"seed", opt.seed},
                        {"version", schub_version()},
                        {"wall_ms", ms},
                        {"digest", "fnv1a64:" + hex64(fnv1a64(result_json))}};
    std::ofstream out(opt.manifest_path);
    out << manifest.dump(2) << "\n";
  }
  std::exit(exit_code);
}

void check(schub_status st) {
  if (st != SCHUB_OK) fail(status_to_exit(st), schub_last_error());
}

std::string render_accept_table(const std::string& report_json) {
  const json rep = json::parse(report_json);
  std::ostringstream os;
  for (const json& c : rep.at("criteria")) {
    os << (c.at("pass").get<bool>() ? "PASS" : "FAIL") << "  " << c.at("id").get<int>() << "  "
       << c.at("name").get<std::string>();
    if (c.contains("detail")) os << "  [" << c.at("detail").get<std::string>() << "]";
    os << "\n";
  }
  os << (rep.at("pass").get<bool>() ? "all criteria passed" : "SOME CRITERIA FAILED");
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Schubert calculus for lines in projective space"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--seed", opt.seed, "seed for every random choice")->capture_default_str();
  app.add_option("--format", opt.format, "json|table (table for accept only)")
      ->capture_default_str();
  app.add_option("--manifest", opt.manifest_path, "write a run manifest to this file");

  const auto start = std::chrono::steady_clock::now();

  // tableau
  auto* tableau = app.add_subcommand("tableau", "tableau calculus");
  auto* star = tableau->add_subcommand("star", "extensions of a tableau in distinct columns");
  std::string star_t;
  int star_alpha = 1;
  star->add_option("--t", star_t, "tableau JSON")->required();
  star->add_option("--alpha", star_alpha, "number of new entries")->required();
  auto* multistar = tableau->add_subcommand("multistar", "iterated star product from empty");
  std::string ms_alphas;
  int ms_cap = 0;
  multistar->add_option("--alphas", ms_alphas, "comma list")->required();
  multistar->add_option("--cap", ms_cap, "drop first rows exceeding cap-1");
  auto* tcount = tableau->add_subcommand("count", "column-block tableau count");
  std::string tc_lambda, tc_alphas;
  tcount->add_option("--lambda", tc_lambda, "two-row shape, comma list")->required();
  tcount->add_option("--alphas", tc_alphas, "comma list")->required();

  // plactic
  auto* plactic = app.add_subcommand("plactic", "tableau algebra");
  auto* pcirc = plactic->add_subcommand("circ", "non-commutative product of two tableaux");
  std::string pc_s, pc_t;
  pcirc->add_option("--s", pc_s, "left tableau JSON")->required();
  pcirc->add_option("--t", pc_t, "right tableau JSON")->required();
  auto* prect = plactic->add_subcommand("rectify", "slide a skew tableau straight");
  std::string pr_skew;
  prect->add_option("--skew", pr_skew, "skew tableau JSON")->required();
  auto* plr = plactic->add_subcommand("lr", "Littlewood-Richardson coefficient");
  std::string lr_lambda, lr_mu, lr_nu;
  plr->add_option("--lambda", lr_lambda)->required();
  plr->add_option("--mu", lr_mu)->required();
  plr->add_option("--nu", lr_nu)->required();

  // chow
  auto* chow = app.add_subcommand("chow", "Chow ring of lines in P^n");
  auto* cprod = chow->add_subcommand("product", "expand a product of basis classes");
  int cp_n = 3;
  std::string cp_classes;
  cprod->add_option("--n", cp_n)->required();
  cprod->add_option("--classes", cp_classes, "e.g. \"(1,0),(1,0)\"")->required();
  auto* cnum = chow->add_subcommand("number", "intersection number");
  int cn_n = 3;
  std::string cn_classes, cn_alphas;
  cnum->add_option("--n", cn_n)->required();
  cnum->add_option("--classes", cn_classes, "e.g. \"(1,0),(1,0)\"");
  cnum->add_option("--alphas", cn_alphas, "single-row classes, e.g. 1,1,1,1");

  // arrangement
  auto* arr = app.add_subcommand("arrangement", "flags plus hyperplanes");
  auto* abuild = arr->add_subcommand("build", "seeded construction");
  int ab_n = 3;
  std::string ab_field = "Fp:5", ab_out;
  abuild->add_option("--n", ab_n)->required();
  abuild->add_option("--field", ab_field, "Q or Fp:<prime>");
  abuild->add_option("-o,--out", ab_out, "also write the JSON here");
  auto* averify = arr->add_subcommand("verify", "check the defining conditions both ways");
  std::string av_file;
  averify->add_option("file", av_file, "arrangement JSON file")->required();
  auto* abound = arr->add_subcommand("bound", "guaranteed-success field size");
  int abound_n = 5;
  abound->add_option("--n", abound_n)->required();
  auto* apencil = arr->add_subcommand("pencil", "verify the degenerating hyperplane pencil");
  int ap_n = 3, ap_trials = 50;
  std::string ap_field = "Fp:5";
  apencil->add_option("--n", ap_n)->required();
  apencil->add_option("--field", ap_field, "Q or Fp:<prime>");
  apencil->add_option("--trials", ap_trials, "rational parameters to sample");

  // ff
  auto* ff = app.add_subcommand("ff", "brute force over finite fields");
  auto* flines = ff->add_subcommand("lines", "number of lines in P^n(F_q)");
  int fl_n = 2;
  long long fl_q = 2;
  flines->add_option("--n", fl_n)->required();
  flines->add_option("--q", fl_q)->required();
  auto* fsolve = ff->add_subcommand("solve", "scan all lines against the conditions");
  std::string fs_problem;
  fsolve->add_option("--problem", fs_problem, "problem JSON file")->required();
  auto* fsegre = ff->add_subcommand("segre", "four-plane instance");
  int fseg_n = 2;
  std::string fseg_field = "Fp:5", fseg_points;
  bool fseg_no_solve = false;
  fsegre->add_option("--n", fseg_n)->required();
  fsegre->add_option("--field", fseg_field, "Q or Fp:<prime>");
  fsegre->add_option("--q", fl_q, "shorthand for --field Fp:q")->group("");
  fsegre->add_option("--points", fseg_points, "e.g. \"[1,0],[0,1]\"");
  fsegre->add_flag("--no-solve", fseg_no_solve, "skip the exhaustive scan");
  auto* fscroll = ff->add_subcommand("scroll", "ruling-line instance");
  int fsc_n = 2;
  std::string fsc_field = "Fp:5", fsc_roots;
  fscroll->add_option("--n", fsc_n)->required();
  fscroll->add_option("--field", fsc_field, "Q or Fp:<prime>");
  fscroll->add_option("--roots", fsc_roots, "e.g. \"[1,0],[0,1]\"");
  auto* fcheck = ff->add_subcommand("check", "line-set identities");
  std::string fc_which;
  int fc_n = 3;
  long long fc_q = 5;
  std::string fc_prefix;
  int fc_s = 0, fc_alpha = 2;
  bool fc_negative = false;
  fcheck->add_option("which", fc_which, "lemma24|lemma23|lemma52")->required();
  fcheck->add_option("--n", fc_n);
  fcheck->add_option("--q", fc_q);
  fcheck->add_option("--prefix", fc_prefix, "comma list of alphas (lemma52)");
  fcheck->add_option("--s", fc_s, "step (lemma52)");
  fcheck->add_option("--alpha", fc_alpha, "alpha (lemma52)");
  fcheck->add_flag("--negative-control", fc_negative, "use a wrong section (lemma52)");

  auto* accept = app.add_subcommand("accept", "run the acceptance matrix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::exit(app.exit(e));
  } catch (const CLI::ParseError& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    std::exit(kExitUsage);
  }

  const int threads = thread_cap();
  char* out = nullptr;

  if (star->parsed()) {
    check(schub_tableau_star(star_t.c_str(), star_alpha, &out));
    finish(opt, "tableau star", {{"t", star_t}, {"alpha", star_alpha}}, take_string(out), start);
  }
  if (multistar->parsed()) {
    const auto alphas = parse_int_list(ms_alphas, "--alphas");
    check(schub_tableau_multistar(alphas.data(), static_cast<int>(alphas.size()), ms_cap, &out));
    finish(opt, "tableau multistar", {{"alphas", alphas}, {"cap", ms_cap}}, take_string(out),
           start);
  }
  if (tcount->parsed()) {
    const auto lambda = parse_int_list(tc_lambda, "--lambda");
    const auto alphas = parse_int_list(tc_alphas, "--alphas");
    long long value = 0;
    check(schub_tableau_count(lambda.data(), static_cast<int>(lambda.size()), alphas.data(),
                              static_cast<int>(alphas.size()), &value));
    finish(opt, "tableau count", {{"lambda", lambda}, {"alphas", alphas}},
           json{{"value", value}}.dump(), start);
  }
  if (pcirc->parsed()) {
    check(schub_plactic_circ(pc_s.c_str(), pc_t.c_str(), &out));
    finish(opt, "plactic circ", {{"s", pc_s}, {"t", pc_t}}, take_string(out), start);
  }
  if (prect->parsed()) {
    check(schub_plactic_rectify(pr_skew.c_str(), &out));
    finish(opt, "plactic rectify", {{"skew", pr_skew}}, take_string(out), start);
  }
  if (plr->parsed()) {
    const auto lambda = parse_int_list(lr_lambda, "--lambda");
    const auto mu = parse_int_list(lr_mu, "--mu");
    const auto nu = parse_int_list(lr_nu, "--nu");
    long long value = 0;
    check(schub_plactic_lr(lambda.data(), static_cast<int>(lambda.size()), mu.data(),
                           static_cast<int>(mu.size()), nu.data(), static_cast<int>(nu.size()),
                           &value));
    finish(opt, "plactic lr", {{"lambda", lambda}, {"mu", mu}, {"nu", nu}},
           json{{"value", value}}.dump(), start);
  }
  if (cprod->parsed()) {
    const std::string classes = parse_class_list(cp_classes);
    check(schub_chow_product(cp_n, classes.c_str(), &out));
    finish(opt, "chow product", {{"n", cp_n}, {"classes", classes}}, take_string(out), start);
  }
  if (cnum->parsed()) {
    std::string classes;
    if (!cn_classes.empty()) {
      classes = parse_class_list(cn_classes);
    } else if (!cn_alphas.empty()) {
      json arr_j = json::array();
      for (int a : parse_int_list(cn_alphas, "--alphas")) arr_j.push_back(json::array({a, 0}));
      classes = arr_j.dump();
    } else {
      fail(kExitUsage, "chow number needs --classes or --alphas");
    }
    long long value = 0;
    check(schub_chow_number(cn_n, classes.c_str(), &value));
    finish(opt, "chow number", {{"n", cn_n}, {"classes", classes}}, json{{"value", value}}.dump(),
           start);
  }
  if (abuild->parsed()) {
    schub_arrangement* handle = nullptr;
    check(schub_arrangement_build(ab_n, ab_field.c_str(), opt.seed, &handle));
    check(schub_arrangement_json(handle, &out));
    const std::string text = take_string(out);
    schub_arrangement_free(handle);
    if (!ab_out.empty()) {
      std::ofstream f(ab_out);
      if (!f) fail(kExitBadInput, "cannot write '" + ab_out + "'");
      f << text << "\n";
    }
    finish(opt, "arrangement build", {{"n", ab_n}, {"field", ab_field}, {"out", ab_out}}, text,
           start);
  }
  if (averify->parsed()) {
    schub_arrangement* handle = nullptr;
    check(schub_arrangement_parse(read_file(av_file).c_str(), &handle));
    check(schub_arrangement_verify(handle, &out));
    schub_arrangement_free(handle);
    finish(opt, "arrangement verify", {{"file", av_file}}, take_string(out), start);
  }
  if (abound->parsed()) {
    check(schub_arrangement_bound(abound_n, &out));
    finish(opt, "arrangement bound", {{"n", abound_n}}, take_string(out), start);
  }
  if (apencil->parsed()) {
    check(schub_pencil_check(ap_n, ap_field.c_str(), opt.seed, ap_trials, &out));
    finish(opt, "arrangement pencil", {{"n", ap_n}, {"field", ap_field}, {"trials", ap_trials}},
           take_string(out), start);
  }
  if (flines->parsed()) {
    check(schub_ff_line_count(fl_n, fl_q, &out));
    finish(opt, "ff lines", {{"n", fl_n}, {"q", fl_q}}, take_string(out), start);
  }
  if (fsolve->parsed()) {
    check(schub_ff_solve(read_file(fs_problem).c_str(), threads, &out));
    finish(opt, "ff solve", {{"problem", fs_problem}}, take_string(out), start);
  }
  if (fsegre->parsed()) {
    std::string field = fseg_field;
    if (fsegre->count("--q")) field = "Fp:" + std::to_string(fl_q);
    const std::string points = fseg_points.empty() ? "" : parse_point_list(fseg_points);
    check(schub_ff_segre(fseg_n, field.c_str(), points.empty() ? nullptr : points.c_str(),
                         fseg_no_solve ? 0 : 1, threads, &out));
    finish(opt, "ff segre", {{"n", fseg_n}, {"field", field}, {"points", points}},
           take_string(out), start);
  }
  if (fscroll->parsed()) {
    const std::string roots = fsc_roots.empty() ? "" : parse_point_list(fsc_roots);
    check(schub_ff_scroll(fsc_n, fsc_field.c_str(), roots.empty() ? nullptr : roots.c_str(),
                          &out));
    finish(opt, "ff scroll", {{"n", fsc_n}, {"field", fsc_field}, {"roots", roots}},
           take_string(out), start);
  }
  if (fcheck->parsed()) {
    json params{{"n", fc_n}, {"q", fc_q}, {"seed", opt.seed}};
    if (!fc_prefix.empty()) params["prefix"] = parse_int_list(fc_prefix, "--prefix");
    params["s"] = fc_s;
    params["alpha"] = fc_alpha;
    params["negative_control"] = fc_negative;
    check(schub_ff_check(fc_which.c_str(), params.dump().c_str(), &out));
    finish(opt, "ff check " + fc_which, params, take_string(out), start);
  }
  if (accept->parsed()) {
    check(schub_accept(threads, &out));
    const std::string report = take_string(out);
    const bool pass = json::parse(report).at("pass").get<bool>();
    if (opt.format == "table") {
      std::cout << render_accept_table(report) << "\n";
      std::exit(pass ? kExitOk : kExitFailure);
    }
    finish(opt, "accept", json::object(), report, start, pass ? kExitOk : kExitFailure);
  }

  fail(kExitUsage, "no subcommand given");
}
