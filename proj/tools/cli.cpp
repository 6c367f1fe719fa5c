#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hcube/hcube.hpp"

namespace hcube::cli {
namespace {

constexpr const char* kFormats = R"(File formats:
  word       fixed-width binary string, leftmost character = coordinate 1
             ("000011" has ones in coordinates 5 and 6), or 0x-prefixed hex
             read as an n-bit field with coordinate 1 as the top bit.
  matrix     "[[a,b],[c,d]]", "a,b;c,d", or a matrix file
             {"n": 12, "kind": "halved-even", "k": 2, "S": [[4,62],[2,64]]}
  partition  line 1: "n=<n> kind=<full|halved-even|halved-odd> k=<k>"
             line 2 (optional): "S=<row;row;...>" with comma-separated entries
             then one label per vertex in increasing word order (one digit per
             vertex for k <= 10, comma-separated integers otherwise), 64 per line.
  code       line 1: "n=<n>", then one word per line.
  faces      line 1: "n=<n> s=<s>", then "<free_mask> <anchor>" per face (words).
  instance   CPLEX LP: binary x<i> = 1 iff the vertex with ordinal i is in cell 0;
             one constraint per vertex (sum over neighbors of x_u + (c - a) x_v = c)
             and one cardinality constraint (sum of x_v = |C0|).
Reports (--report): JSON with "schema": 1 and sorted keys.
Exit codes: 0 success, 1 domain error, 2 usage error.)";

struct Global {
  unsigned threads = 1;
  std::string report_path;
};

/// Parsed once; subcommand callbacks fill `body` and return the exit code.
struct Context {
  std::ostream& out;
  std::ostream& err;
  Global global;
  Json report;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::string cur;
  for (char ch : text) {
    if (ch == ',' || ch == ' ') {
      if (!cur.empty()) items.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) items.push_back(cur);
  return items;
}

std::vector<word_t> parse_words(const std::string& text, int n) {
  std::vector<word_t> out;
  for (const auto& item : split_list(text)) out.push_back(BinaryWord::parse(item, n).bits());
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorCode::Parse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Partition load_partition(const std::string& path) {
  std::istringstream in(read_file(path));
  return read_partition(in);
}

UnrestrictedCode load_code(const std::string& path) {
  std::istringstream in(read_file(path));
  return read_code(in);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  require(static_cast<bool>(f), ErrorCode::Parse, "cannot write " + path);
  f << text;
}

/// An artifact goes to --out when given (summary to stdout), else to stdout
/// (summary to stderr).
struct Sink {
  Context& ctx;
  std::string path;

  std::ostream& summary() { return path.empty() ? ctx.err : ctx.out; }
  void artifact(const std::string& text) {
    if (path.empty()) ctx.out << text;
    else write_text(path, text);
  }
};

struct MatrixArg {
  std::string text;
  std::string file;

  void add(CLI::App* app) {
    app->add_option("--matrix", text, "quotient matrix, e.g. \"[[4,62],[2,64]]\"");
    app->add_option("--matrix-file", file, "matrix file (supplies n and kind as well)")->check(CLI::ExistingFile);
  }

  /// Graph and matrix; a matrix file overrides n and kind.
  std::pair<CubeGraph, QuotientMatrix> resolve(int n, const std::string& kind) const {
    if (!file.empty()) {
      const auto mf = parse_matrix_file(read_file(file));
      return {mf.graph, mf.matrix};
    }
    require(n > 0, ErrorCode::Precondition, "--n is required");
    require(!text.empty(), ErrorCode::Precondition, "--matrix or --matrix-file is required");
    return {CubeGraph(parse_kind(kind), n), QuotientMatrix::parse(text)};
  }
};

std::string verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

// ---------------------------------------------------------------------------
// theta

void add_theta(CLI::App& app, Context& ctx, std::function<int()>& action) {
  auto* cmd = app.add_subcommand("theta", "eigenvalues of a cube graph, largest first");
  auto n = std::make_shared<int>(0);
  auto kind = std::make_shared<std::string>("halved-even");
  cmd->add_option("--n", *n, "word length")->required();
  cmd->add_option("--kind", *kind, "full, halved-even or halved-odd");
  cmd->callback([&ctx, &action, n, kind] {
    action = [&ctx, n, kind] {
      const CubeGraph g(parse_kind(*kind), *n);
      const auto values = graph_spectrum(g);
      for (std::size_t i = 0; i < values.size(); ++i) ctx.out << (i ? "," : "") << values[i];
      ctx.out << '\n';
      ctx.report["graph"] = graph_json(g);
      ctx.report["eigenvalues"] = values;
      return 0;
    };
  });
}

// ---------------------------------------------------------------------------
// enumerate / filter / recursion

void add_enumerate(CLI::App& app, Context& ctx, std::function<int()>& action) {
  auto* cmd = app.add_subcommand("enumerate", "matrices passing conditions 1-3 (b >= c), ordered by decreasing c");
  struct Opt {
    int n = 0;
    std::optional<int> eig;
    bool cond4 = false;
    bool no_thm2 = false;
    std::string kind = "halved-even";
  };
  auto o = std::make_shared<Opt>();
  cmd->add_option("--n", o->n, "word length")->required();
  cmd->add_option("--eig", o->eig, "eigenvalue index i (default: all)");
  cmd->add_flag("--cond4", o->cond4, "also require the recursion condition");
  cmd->add_flag("--no-thm2", o->no_thm2, "keep minimum-eigenvalue matrices without an H(n-1) counterpart");
  cmd->add_option("--kind", o->kind, "halved-even or halved-odd");
  cmd->callback([&ctx, &action, o] {
    action = [&ctx, o] {
      const auto kind = parse_kind(o->kind);
      require(kind != GraphKind::FullCube, ErrorCode::Precondition, "enumeration is defined for halved cubes");
      std::vector<int> indices;
      if (o->eig) indices.push_back(*o->eig);
      else
        for (int i = 1; i <= o->n / 2; ++i) indices.push_back(i);
      Json lists = Json::array();
      for (int i : indices) {
        const auto found = enumerate_admissible(o->n, i, o->cond4, !o->no_thm2, kind);
        if (!o->eig) ctx.out << "theta_" << i << '(' << o->n << ")=" << theta(o->n, i) << ":\n";
        Json ms = Json::array();
        for (const auto& r : found) {
          ctx.out << r.matrix.to_string() << '\n';
          ms.push_back(r.matrix.to_json());
        }
        lists.push_back(Json{{"index", i}, {"eigenvalue", theta(o->n, i)}, {"matrices", ms}});
      }
      ctx.report["graph"] = graph_json(CubeGraph(kind, o->n));
      ctx.report["cond4"] = o->cond4;
      ctx.report["thm2_filter"] = !o->no_thm2;
      ctx.report["candidates"] = lists;
      return 0;
    };
  });
}

void add_filter(CLI::App& app, Context& ctx, std::function<int()>& action) {
  auto* cmd = app.add_subcommand("filter", "check conditions 1-4 for one matrix");
  struct Opt {
    int n = 0;
    std::string kind = "halved-even";
    MatrixArg matrix;
  };
  auto o = std::make_shared<Opt>();
  cmd->add_option("--n", o->n, "word length");
  cmd->add_option("--kind", o->kind, "full, halved-even or halved-odd");
  o->matrix.add(cmd);
  cmd->callback([&ctx, &action, o] {
    action = [&ctx, o] {
      const auto [g, s] = o->matrix.resolve(o->n, o->kind);
      require(s.k() == 2, ErrorCode::Shape, "conditions are stated for 2x2 matrices");
      const auto r = check_admissible(s, g);
      const auto& c = r.conditions;
      ctx.out << "graph " << g.description() << '\n' << "matrix " << s.to_string() << '\n';
      ctx.out << "condition 1 (entries, row sums): " << verdict(c.cond1_integrality) << '\n';
      ctx.out << "condition 2 (cell proportion): " << verdict(c.cond2_proportion);
      if (c.cell_sizes) ctx.out << " |C0|=" << c.cell_sizes->first << " |C1|=" << c.cell_sizes->second;
      ctx.out << '\n' << "condition 3 (eigenvalue): " << verdict(c.cond3_eigenvalue);
      if (c.eigenvalue) ctx.out << " theta_" << c.eigenvalue->index << '(' << g.n() << ")=" << c.eigenvalue->value;
      ctx.out << '\n';
      if (r.table) {
        ctx.out << "condition 4 (recursion): " << verdict(r.cond4_recursion);
        if (const auto bad = r.table->first_offending_distance())
          ctx.out << " at S^(" << *bad << ") = " << r.table->at_distance(*bad).to_string();
        ctx.out << '\n';
      }
      if (!c.detail.empty()) ctx.out << "detail: " << c.detail << '\n';
      ctx.out << "admissible: " << (r.overall() ? "yes" : "no") << '\n';
      ctx.report["admissibility"] = admissibility_json(r);
      return 0;
    };
  });
}

void add_recursion(CLI::App& app, Context& ctx, std::function<int()>& action) {
  auto* cmd = app.add_subcommand("recursion", "cell counts S^(i) at every even Hamming distance i");
  struct Opt {
    int n = 0;
    MatrixArg matrix;
  };
  auto o = std::make_shared<Opt>();
  cmd->add_option("--n", o->n, "word length");
  o->matrix.add(cmd);
  cmd->callback([&ctx, &action, o] {
    action = [&ctx, o] {
      const auto [g, s] = o->matrix.resolve(o->n, "halved-even");
      const auto t = recursion_table(s, g.n());
      for (std::size_t m = 0; m < t.layers.size(); ++m)
        ctx.out << "S^(" << 2 * m << ") = " << t.layers[m].to_string() << '\n';
      ctx.out << "verdict: " << verdict(t.passes());
      if (const auto bad = t.first_offending_distance())
        ctx.out << " (S^(" << *bad << ") is not a nonnegative integer matrix)";
      ctx.out << '\n';
      ctx.report["recursion"] = recursion_json(t);
      return 0;
    };
  });
}

// ---------------------------------------------------------------------------
// construct

std::vector<Face> read_faces(const std::string& path, const CubeGraph& host) {
  std::istringstream in(read_file(path));
  std::string line;
  require(static_cast<bool>(std::getline(in, line)), ErrorCode::Parse, "missing faces header");
  std::istringstream header(line);
  std::string tn, ts;
  header >> tn >> ts;
  const int n = detail::parse_int_field(tn, "n");
  const int s = detail::parse_int_field(ts, "s");
  require(n == host.n(), ErrorCode::Parse, "faces file is for n = " + std::to_string(n));
  std::vector<Face> faces;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string mask, anchor;
    row >> mask >> anchor;
    require(!mask.empty() && !anchor.empty(), ErrorCode::Parse, "face line needs a free mask and an anchor");
    Face f{BinaryWord::parse(mask, n).bits(), BinaryWord::parse(anchor, n).bits(), host};
    f.validate();
    require(f.dimension() == s, ErrorCode::Parse, "face dimension differs from s = " + std::to_string(s));
    faces.push_back(f);
  }
  return faces;
}

std::string faces_to_string(const FacePartition& fp, int n) {
  std::ostringstream os;
  os << "n=" << n << " s=" << fp.dimension() << '\n';
  for (const auto& f : fp.faces()) os << format_word(f.free_mask, n) << ' ' << format_word(f.anchor, n) << '\n';
  return os.str();
}

UnrestrictedCode catalog_code(const std::string& name) {
  if (name == "hadamard12") return hadamard12();
  const auto colon = name.find(':');
  if (name.substr(0, colon) == "repetition" && colon != std::string::npos)
    return repetition(std::stoi(name.substr(colon + 1)));
  fail(ErrorCode::Parse, "unknown catalog code \"" + name + "\" (use repetition:<n> or hadamard12)");
}

void add_construct(CLI::App& app, Context& ctx, std::function<int()>& action) {
  auto* cmd = app.add_subcommand("construct", "build a partition and verify it");
  struct Opt {
    std::string method;
    std::string input, input2, code, catalog, faces, family, out, faces_out;
    std::string kind = "halved-even";
    std::string translates, rows, generators, reps;
    int n = 0, t = 0, c = -1, radius = 4;
    bool inverse = false, unmerged = false, verify_large = false;
  };
  auto o = std::make_shared<Opt>();
  cmd->add_option("--method", o->method, "restrict, lift, thm2, radius4, linear, cosets, union, timesT, split")
      ->required()
      ->check(CLI::IsMember({"restrict", "lift", "thm2", "radius4", "linear", "cosets", "union", "timesT", "split"}));
  cmd->add_option("--input", o->input, "input partition file")->check(CLI::ExistingFile);
  cmd->add_option("--input2", o->input2, "second partition file (union)")->check(CLI::ExistingFile);
  cmd->add_option("--code", o->code, "code file (radius4, union)")->check(CLI::ExistingFile);
  cmd->add_option("--catalog", o->catalog, "catalog code: repetition:<n> or hadamard12");
  cmd->add_option("--radius", o->radius, "covering radius for --method radius4 (3 or 4)");
  cmd->add_option("--translates", o->translates, "comma-separated translation words (union of radius-4 codes)");
  cmd->add_option("--kind", o->kind, "target kind for restrict");
  cmd->add_flag("--inverse", o->inverse, "thm2: map a 1/2H(n) partition back to H(n-1)");
  cmd->add_option("--n", o->n, "word length (linear, cosets)");
  cmd->add_option("--rows", o->rows, "parity-check rows, the first all ones (linear)");
  cmd->add_option("--generators", o->generators, "generators of the base code (cosets)");
  cmd->add_option("--reps", o->reps, "coset representatives (cosets; default: smallest words)");
  cmd->add_option("--t", o->t, "number of cosets / block length");
  cmd->add_option("--faces", o->faces, "faces file partitioning cell 1 (split)")->check(CLI::ExistingFile);
  cmd->add_option("--family", o->family, "built-in split family (n6)")->check(CLI::IsMember({"n6"}));
  cmd->add_option("--c", o->c, "family parameter c = 0..14");
  cmd->add_flag("--unmerged", o->unmerged, "split: keep the 3-cell partition");
  cmd->add_option("--faces-out", o->faces_out, "split: also write the faces file used");
  cmd->add_flag("--verify-large", o->verify_large, "verify outputs with n > 16 as well");
  cmd->add_option("--out", o->out, "partition output file (default: stdout)");
  cmd->callback([&ctx, &action, o] {
    action = [&ctx, o] {
      ConstructOptions copt{o->verify_large, ctx.global.threads};
      Json params{{"method", o->method}};
      std::optional<Construction> result;
      auto need_input = [&] {
        require(!o->input.empty(), ErrorCode::Precondition, "--input is required for --method " + o->method);
        params["input"] = o->input;
        return load_partition(o->input);
      };
      auto need_code = [&] {
        if (!o->code.empty()) {
          params["code"] = o->code;
          return load_code(o->code);
        }
        require(!o->catalog.empty(), ErrorCode::Precondition, "--code or --catalog is required");
        params["catalog"] = o->catalog;
        return catalog_code(o->catalog);
      };
      const auto& m = o->method;
      if (m == "restrict") {
        result = restrict_from_cube(need_input(), parse_kind(o->kind), copt);
      } else if (m == "lift") {
        result = odd_lift(need_input(), copt);
      } else if (m == "thm2") {
        auto p = need_input();
        if (o->inverse) {
          auto back = thm2_untransfer(p);
          const auto v = verify_equitable(back, {copt.threads});
          require(v.equitable, ErrorCode::NotEquitable, "preimage is not equitable");
          result = detail::certify(std::move(back), v.matrix, copt);
        } else {
          result = thm2_transfer(p, copt);
        }
        params["inverse"] = o->inverse;
      } else if (m == "radius4") {
        const auto code = need_code();
        require(o->radius == 3 || o->radius == 4, ErrorCode::Radius, "--radius must be 3 or 4");
        result = o->radius == 4 ? radius4_partition(code, copt) : radius3_partition(code, copt);
        params["radius"] = o->radius;
      } else if (m == "union") {
        if (!o->translates.empty()) {
          const auto code = need_code();
          std::vector<UnrestrictedCode> codes;
          for (auto w : parse_words(o->translates, code.n())) codes.push_back(code.translated(w));
          result = union_translates_radius4(codes, copt);
          params["translates"] = split_list(o->translates);
        } else {
          require(!o->input2.empty(), ErrorCode::Precondition, "union needs --translates or --input and --input2");
          auto a = need_input();
          params["input2"] = o->input2;
          result = union_disjoint(a, load_partition(o->input2), copt);
        }
      } else if (m == "linear") {
        require(o->n > 0 && !o->rows.empty(), ErrorCode::Precondition, "linear needs --n and --rows");
        auto lp = linear_partition(o->n, parse_words(o->rows, o->n), copt);
        params["rows"] = split_list(o->rows);
        params["pair_sum_constant"] = lp.report.constant_on_nonzero;
        if (lp.report.nonzero_value) params["pair_sum_value"] = *lp.report.nonzero_value;
        params["code_size"] = lp.code.size();
        if (!lp.outcome.equitable) {
          ctx.report["verification"] = verification_json(lp.partition, lp.outcome);
          ctx.report["parameters"] = params;
          ctx.err << "not equitable: the pair sums of B are not constant on nonzero syndromes\n";
          return 1;
        }
        auto q = lp.outcome.matrix;
        result = detail::certify(std::move(lp.partition), q, copt);
      } else if (m == "cosets") {
        require(o->n > 0 && !o->generators.empty() && o->t > 0, ErrorCode::Precondition,
                "cosets needs --n, --generators and --t");
        const LinearCode base(o->n, parse_words(o->generators, o->n));
        std::optional<std::vector<word_t>> reps;
        if (!o->reps.empty()) reps = parse_words(o->reps, o->n);
        result = merge_cosets(base, o->t, reps, copt);
        params["generators"] = split_list(o->generators);
        params["t"] = o->t;
      } else if (m == "timesT") {
        auto p = need_input();
        require(o->t >= 1, ErrorCode::Precondition, "--t is required");
        result = p.graph().kind() == GraphKind::FullCube ? times_t_cube(p, o->t, copt) : times_t_halved(p, o->t, copt);
        params["t"] = o->t;
      } else if (m == "split") {
        std::optional<Partition> base;
        std::optional<FacePartition> fp;
        if (!o->family.empty()) {
          require(o->c >= 0, ErrorCode::Precondition, "--family n6 needs --c");
          auto member = build_n6_split_family(o->c);
          base = std::move(member.base);
          fp = std::move(member.faces);
          params["family"] = o->family;
          params["c"] = o->c;
        } else {
          base = need_input();
          require(!o->faces.empty(), ErrorCode::Precondition, "split needs --faces or --family");
          fp = FacePartition(*base, 1, read_faces(o->faces, base->graph()));
          params["faces"] = o->faces;
        }
        if (!o->faces_out.empty()) write_text(o->faces_out, faces_to_string(*fp, base->graph().n()));
        params["s"] = fp->dimension();
        if (o->unmerged) {
          auto sp = split(*base, *fp, copt);
          params["base_matrix"] = sp.base.to_json();
          result = std::move(sp.result);
        } else {
          result = split_merged(*base, *fp, copt);
        }
        params["unmerged"] = o->unmerged;
      }
      Sink sink{ctx, o->out};
      sink.artifact(partition_to_string(result->partition));
      auto& s = sink.summary();
      s << "graph " << result->partition.graph().description() << '\n';
      s << "claimed " << result->claimed.to_string() << '\n';
      s << "verified " << (result->verified ? result->verified->to_string() : std::string("(skipped)")) << '\n';
      ctx.report["construction"] = construction_json(m, *result, params);
      return 0;
    };
  });
}

// ---------------------------------------------------------------------------
// verify

void add_verify(CLI::App& app, Context& ctx, std::function<int()>& action) {
  auto* cmd = app.add_subcommand("verify", "check that a partition file is equitable");
  struct Opt {
    std::string partition, claimed;
    bool distances = false;
  };
  auto o = std::make_shared<Opt>();
  cmd->add_option("--partition", o->partition, "partition file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--claimed", o->claimed, "expected matrix (overrides the S= line)");
  cmd->add_flag("--distances", o->distances, "also print cell counts at every Hamming distance");
  cmd->callback([&ctx, &action, o] {
    action = [&ctx, o] {
      auto p = load_partition(o->partition);
      if (!o->claimed.empty()) p.set_claimed(QuotientMatrix::parse(o->claimed));
      const auto v = verify_equitable(p, {ctx.global.threads});
      ctx.report["verification"] = verification_json(p, v);
      ctx.out << "graph " << p.graph().description() << '\n';
      if (!v.equitable) {
        const auto& w = *v.witness;
        ctx.out << "equitable: no\n";
        ctx.out << "witness: vertex " << format_word(w.vertex, p.graph().n()) << " in cell " << w.cell << " has "
                << w.observed << " neighbors in cell " << w.target << ", expected " << w.expected << '\n';
        return 1;
      }
      ctx.out << "equitable: yes\nmatrix " << v.matrix.to_string() << '\n';
      if (p.claimed()) ctx.out << "claimed " << p.claimed()->to_string() << (v.confirms() ? " (confirmed)" : " (MISMATCH)") << '\n';
      if (o->distances) {
        const auto ms = distance_count_matrices(p);
        Json rows = Json::array();
        for (std::size_t i = 0; i < ms.size(); ++i) {
          ctx.out << "distance " << i << ": " << (ms[i] ? ms[i]->to_string() : std::string("not constant")) << '\n';
          rows.push_back(ms[i] ? ms[i]->to_json() : Json(nullptr));
        }
        ctx.report["distance_counts"] = rows;
      }
      return v.confirms() ? 0 : 1;
    };
  });
}

// ---------------------------------------------------------------------------
// search / classify / export

struct SearchFlags {
  std::uint64_t limit_nodes = 0;
  double limit_secs = 0;
  bool all = false, no_symmetry = false, no_prefilter = false, timing = false;
  int split_depth = SearchOptions{}.split_depth;

  void add(CLI::App* cmd) {
    cmd->add_option("--limit-nodes", limit_nodes, "node limit (0: none)");
    cmd->add_option("--limit-secs", limit_secs, "time limit in seconds (0: none)");
    cmd->add_flag("--no-symmetry", no_symmetry, "disable orbital branching");
    cmd->add_flag("--no-prefilter", no_prefilter, "search even if a necessary condition already fails");
    cmd->add_option("--split-depth", split_depth, "decision depth at which the tree is cut into subproblems");
    cmd->add_flag("--timing", timing, "print wall time (makes output run-dependent)");
  }
  [[nodiscard]] SearchOptions options(unsigned threads) const {
    SearchOptions o;
    o.node_limit = limit_nodes;
    o.time_limit_secs = limit_secs;
    o.find_all = all;
    o.symmetry_breaking = !no_symmetry;
    o.prefilter = !no_prefilter;
    o.threads = threads;
    o.split_depth = split_depth;
    return o;
  }
};

void add_search(CLI::App& app, Context& ctx, std::function<int()>& action) {
  auto* cmd = app.add_subcommand("search", "decide whether an equitable 2-partition with a given matrix exists");
  struct Opt {
    int n = 0;
    std::string kind = "halved-even";
    MatrixArg matrix;
    SearchFlags flags;
    std::string out;
    std::string root;
  };
  auto o = std::make_shared<Opt>();
  cmd->add_option("--n", o->n, "word length");
  cmd->add_option("--kind", o->kind, "full, halved-even or halved-odd");
  o->matrix.add(cmd);
  o->flags.add(cmd);
  cmd->add_option("--root", o->root, "vertex pinned to cell 0 (binary word; default the smallest vertex)");
  cmd->add_flag("--all", o->flags.all, "count all solutions with the root in cell 0");
  cmd->add_option("--out", o->out, "write the first partition found to this file");
  cmd->callback([&ctx, &action, o] {
    action = [&ctx, o] {
      const auto [g, s] = o->matrix.resolve(o->n, o->kind);
      SearchProblem problem{g, s, o->flags.options(ctx.global.threads)};
      if (!o->root.empty()) problem.options.root = BinaryWord::parse(o->root, g.n()).bits();
      const auto r = search(problem);
      ctx.out << "graph " << g.description() << '\n' << "matrix " << s.to_string() << '\n';
      ctx.out << "status " << status_name(r.status) << '\n';
      if (!r.reason.empty()) ctx.out << "reason " << r.reason << '\n';
      ctx.out << "symmetry " << (r.symmetry_breaking ? "on" : "off") << '\n';
      ctx.out << "nodes " << r.stats.nodes << '\n';
      if (problem.options.find_all) ctx.out << "solutions " << r.solution_count << '\n';
      if (o->flags.timing) ctx.out << "seconds " << r.stats.wall_seconds << '\n';
      if (!o->out.empty() && !r.solutions.empty()) write_text(o->out, partition_to_string(r.solutions.front()));
      ctx.report["search"] = search_json(problem, r, o->flags.timing);
      return 0;
    };
  });
}

void add_classify(CLI::App& app, Context& ctx, std::function<int()>& action) {
  auto* cmd = app.add_subcommand("classify", "search every candidate matrix of a halved cube");
  struct Opt {
    int n = 0;
    std::string kind = "halved-even";
    bool long_running = false;
    SearchFlags flags;
  };
  auto o = std::make_shared<Opt>();
  cmd->add_option("--n", o->n, "word length (at most 8, or 10 with --long)")->required();
  cmd->add_option("--kind", o->kind, "halved-even or halved-odd");
  cmd->add_flag("--long", o->long_running, "allow n = 10 (hours)");
  o->flags.add(cmd);
  cmd->callback([&ctx, &action, o] {
    action = [&ctx, o] {
      const auto kind = parse_kind(o->kind);
      const auto entries = classify(o->n, kind, o->flags.options(ctx.global.threads), o->long_running ? 10 : 8);
      ctx.out << classification_text(o->n, entries);
      ctx.report["classification"] = classification_json(o->n, kind, entries);
      return 0;
    };
  });
}

void add_export(CLI::App& app, Context& ctx, std::function<int()>& action) {
  auto* cmd = app.add_subcommand("export", "write the 0/1 instance for an external solver");
  struct Opt {
    int n = 0;
    std::string kind = "halved-even";
    std::string format = "lp";
    MatrixArg matrix;
    std::string out;
  };
  auto o = std::make_shared<Opt>();
  cmd->add_option("--n", o->n, "word length");
  cmd->add_option("--kind", o->kind, "full, halved-even or halved-odd");
  cmd->add_option("--format", o->format, "instance format")->check(CLI::IsMember({"lp"}));
  o->matrix.add(cmd);
  cmd->add_option("--out", o->out, "instance file (default: stdout)");
  cmd->callback([&ctx, &action, o] {
    action = [&ctx, o] {
      const auto [g, s] = o->matrix.resolve(o->n, o->kind);
      const SearchProblem problem{g, s, {}};
      const auto text = export_instance(problem);
      Sink sink{ctx, o->out};
      sink.artifact(text);
      sink.summary() << "variables " << g.vertex_count() << "\nconstraints " << g.vertex_count() + 1 << '\n';
      ctx.report["export"] = Json{{"graph", graph_json(g)},
                                  {"matrix", s.to_json()},
                                  {"format", o->format},
                                  {"variables", g.vertex_count()},
                                  {"count_constraints", g.vertex_count()},
                                  {"cardinality_constraints", 1}};
      return 0;
    };
  });
}

// ---------------------------------------------------------------------------
// catalog

void add_catalog(CLI::App& app, Context& ctx, std::function<int()>& action) {
  auto* cmd = app.add_subcommand("catalog", "write a code file");
  cmd->require_subcommand(1);
  struct Opt {
    int n = 0;
    std::string words, out;
  };
  auto o = std::make_shared<Opt>();
  auto emit = [&ctx, o](const std::string& name, const UnrestrictedCode& code, Json extra) {
    Sink sink{ctx, o->out};
    std::ostringstream text;
    write_code(text, code.n(), code.words());
    sink.artifact(text.str());
    Json j{{"name", name},
           {"n", code.n()},
           {"size", code.size()},
           {"min_distance", code.min_distance()},
           {"even_weight", code.even_weight()}};
    auto& s = sink.summary();
    s << "code " << name << " n=" << code.n() << " size=" << code.size() << " min_distance=" << code.min_distance();
    if (code.n() <= 20) {
      const int rho = code.covering_radius();
      j["covering_radius"] = rho;
      s << " covering_radius=" << rho;
    }
    s << '\n';
    j.update(extra);
    ctx.report["code"] = j;
  };

  auto* rep = cmd->add_subcommand("repetition", "{0...0, 1...1}");
  rep->add_option("--n", o->n, "length")->required();
  rep->add_option("--out", o->out, "code file (default: stdout)");
  rep->callback([&action, o, emit] { action = [o, emit] { emit("repetition", repetition(o->n), Json::object()); return 0; }; });

  auto* had = cmd->add_subcommand("hadamard12", "24-word Hadamard code of length 12 (Paley, GF(11))");
  had->add_option("--out", o->out, "code file (default: stdout)");
  had->callback([&action, o, emit] { action = [emit] { emit("hadamard12", hadamard12(), Json::object()); return 0; }; });

  auto* span = cmd->add_subcommand("span", "linear code spanned by generators");
  span->add_option("--n", o->n, "length")->required();
  span->add_option("--generators", o->words, "comma-separated generators")->required();
  span->add_option("--out", o->out, "code file (default: stdout)");
  span->callback([&action, o, emit] {
    action = [o, emit] {
      const auto c = span_code(o->n, parse_words(o->words, o->n));
      emit("span", UnrestrictedCode::from_linear(c), Json{{"dimension", c.dimension()}});
      return 0;
    };
  });

  auto* ker = cmd->add_subcommand("kernel", "linear code with the given parity-check rows");
  ker->add_option("--n", o->n, "length")->required();
  ker->add_option("--rows", o->words, "comma-separated parity-check rows")->required();
  ker->add_option("--out", o->out, "code file (default: stdout)");
  ker->callback([&action, o, emit] {
    action = [o, emit] {
      const auto c = kernel_code(o->n, parse_words(o->words, o->n));
      emit("kernel", UnrestrictedCode::from_linear(c), Json{{"dimension", c.dimension()}});
      return 0;
    };
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err, {}, report_header("")};
  CLI::App app{"Equitable 2-partitions of hypercubes and halved hypercubes", "hcube"};
  app.footer(kFormats);
  app.require_subcommand(1);
  app.add_option("--threads", ctx.global.threads, "worker threads for search and verification")
      ->check(CLI::Range(1U, 256U));
  app.add_option("--report", ctx.global.report_path, "write the JSON report here (\"-\" appends it to stdout)");

  std::function<int()> action;
  add_theta(app, ctx, action);
  add_enumerate(app, ctx, action);
  add_filter(app, ctx, action);
  add_recursion(app, ctx, action);
  add_construct(app, ctx, action);
  add_verify(app, ctx, action);
  add_search(app, ctx, action);
  add_classify(app, ctx, action);
  add_catalog(app, ctx, action);
  add_export(app, ctx, action);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto* chosen = &app;
    for (const auto* sub : app.get_subcommands())
      if (sub->parsed()) chosen = sub;
    out << chosen->help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  if (!action) {
    err << "usage error: no command given\n";
    return 2;
  }

  for (const auto* sub : app.get_subcommands()) ctx.report["command"] = sub->get_name();
  int code = 0;
  try {
    code = action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    ctx.report["error"] = Json{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    code = 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    ctx.report["error"] = Json{{"code", "Internal"}, {"message", e.what()}};
    code = 1;
  }
  ctx.report["exit_code"] = code;
  if (!ctx.global.report_path.empty()) {
    const auto text = ctx.report.dump(2) + "\n";
    if (ctx.global.report_path == "-") {
      out << text;
    } else {
      try {
        write_text(ctx.global.report_path, text);
      } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
      }
    }
  }
  return code;
}

}  // namespace hcube::cli
