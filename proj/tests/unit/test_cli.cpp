#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "seqdim/equation_io.hpp"

using namespace seqdim;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "seqdim");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SEQDIM_TEST_DATA_DIR) + "/" + name; }

std::string oracle(const std::string& name, const std::string& args = "") {
  std::string cmd = std::string("python3 ") + SEQDIM_TEST_ORACLES_DIR + "/" + name;
  return args.empty() ? cmd : cmd + " " + args;
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("seqdim_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("dim") {
    CHECK(run({"dim", data("fibonacci.json")}).out == "dimension: 2\n");
    CHECK(run({"dim", data("geometric_2_3.json"), "--method", "both"}).out == "dimension: 1\n");
    CHECK(run({"dim", data("switch_first_order.json"), "--method", "groebner"}).out ==
          "dimension: 0\n");
    CHECK(run({"dim", data("switch_order_zero.json")}).out == "dimension: infinite\n");
  }

  TEST_CASE("dim --json is schema-fixed and byte-stable") {
    const Result a = run({"dim", data("fibonacci.json"), "--json"});
    CHECK(a.code == 0);
    CHECK(a.out == "{\"H\":3,\"dimension\":2,\"method\":\"pencil\"}\n");
    for (int i = 0; i < 3; ++i) CHECK(run({"dim", data("fibonacci.json"), "--json"}).out == a.out);
    CHECK(run({"dim", data("switch_order_zero.json"), "--json", "--method", "both"}).out ==
          "{\"H\":2,\"dimension\":\"infinite\",\"method\":\"both\"}\n");
  }

  TEST_CASE("dim errors") {
    const Result nonperiodic = run({"dim", data("perturbed.json")});
    CHECK(nonperiodic.code == 2);
    CHECK(contains(nonperiodic.err, "a_0"));
    TempDir dir;
    std::ofstream(dir.file("bad.json")) << "{\"order\": 1}";
    CHECK(run({"dim", dir.file("bad.json")}).code == 1);
    CHECK(run({"dim", dir.file("missing.json")}).code == 1);
    CHECK(run({"dim", data("fibonacci.json"), "--method", "smith"}).code == 2);
  }

  TEST_CASE("dim batch keeps input order") {
    const Result r = run({"dim", data("switch_order_zero.json"), data("fibonacci.json"),
                          data("geometric_2_3.json")});
    CHECK(r.code == 0);
    CHECK(r.out == data("switch_order_zero.json") + ": dimension: infinite\n" +
                       data("fibonacci.json") + ": dimension: 2\n" +
                       data("geometric_2_3.json") + ": dimension: 1\n");
    const Result mixed = run({"dim", data("fibonacci.json"), data("perturbed.json"), "--json"});
    CHECK(mixed.code == 2);
    CHECK(contains(mixed.out, "\"dimension\":2"));
  }

  TEST_CASE("dim methods print identical output on a corpus") {
    TempDir dir;
    const auto corpus = testing::random_corpus(101, 15);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const std::string f = dir.file("e" + std::to_string(i) + ".json");
      write_equation(corpus[i], f);
      const std::string pencil = run({"dim", f}).out;
      CHECK(run({"dim", f, "--method", "groebner"}).out == pencil);
      CHECK(run({"dim", f, "--method", "both"}).out == pencil);
    }
  }

  TEST_CASE("unfold") {
    const Result fib = run({"unfold", data("fibonacci.json")});
    CHECK(fib.code == 0);
    CHECK(fib.out ==
          "H: 3\n"
          "A0:\n"
          "  [-1 -1  1]\n"
          "  [ 0 -1 -1]\n"
          "  [ 0  0 -1]\n"
          "A1:\n"
          "  [ 0  0  0]\n"
          "  [ 1  0  0]\n"
          "  [-1  1  0]\n"
          "det P(t): t^2 - 4t - 1\n");
    CHECK(contains(run({"unfold", data("geometric_2_3.json")}).out, "det P(t): -t + 6\n"));
    const Result h4 = run({"unfold", data("fibonacci.json"), "--H", "4"});
    CHECK(h4.code == 0);
    CHECK(contains(h4.out, "H: 4\n"));
    CHECK(run({"unfold", data("fibonacci.json"), "--H", "2"}).code == 2);
    CHECK(run({"unfold", data("geometric_2_3.json"), "--H", "3"}).code == 2);
    CHECK(run({"unfold", data("perturbed.json")}).code == 2);
  }

  TEST_CASE("construct and oracle") {
    TempDir dir;
    CHECK(run({"construct", "ed", "--d", "3", "-o", dir.file("e3.json")}).code == 0);
    CHECK(contains(run({"oracle", dir.file("e3.json")}).out, "value 3, stabilized"));
    CHECK(run({"construct", "ecirc", "--r", "2", "-o", dir.file("ec.json")}).code == 0);
    CHECK(contains(run({"oracle", dir.file("ec.json")}).out, "value 0, stabilized"));
    CHECK(run({"construct", "order-dim", "--r", "1", "--d", "2", "-o", dir.file("od.json")}).code ==
          0);
    CHECK(contains(run({"oracle", dir.file("od.json")}).out, "value 2, stabilized"));
    CHECK(run({"construct", "einf", "-o", dir.file("einf.json")}).code == 0);
    const Result inf = run({"oracle", dir.file("einf.json"), "--cap", "50"});
    CHECK(contains(inf.out, "value 50, cap_reached"));
    CHECK(contains(inf.out, "caveat:"));
    CHECK(run({"dim", dir.file("einf.json")}).code == 2);
    CHECK(contains(run({"construct", "thm4-finite", "--a", "1", "--b", "3"}).out, "\"oracle\""));
  }

  TEST_CASE("construct errors") {
    CHECK(run({"construct", "ecirc"}).code == 2);
    CHECK(run({"construct", "ecirc", "--r", "0"}).code == 2);
    CHECK(run({"construct", "thm4-finite", "--a", "3", "--b", "1"}).code == 2);
    CHECK(run({"construct", "order-dim", "--r", "1", "--d", "many"}).code == 2);
    CHECK(run({"construct", "ed", "--d", "infinite"}).code == 2);
    CHECK(run({"construct", "lasagne"}).code == 2);
  }

  TEST_CASE("interlace") {
    TempDir dir;
    const Result r = run({"interlace", data("unit_shift.json"), data("unit_shift.json"), "-o",
                          dir.file("both.json")});
    CHECK(r.code == 0);
    CHECK(run({"dim", dir.file("both.json")}).out == "dimension: 2\n");
    CHECK(read_equation(dir.file("both.json")).is_purely_periodic());
    run({"interlace", data("fibonacci.json"), data("geometric_2_3.json"), "-o",
         dir.file("mixed.json")});
    CHECK(read_equation(dir.file("mixed.json")).order() == 4);
    CHECK(run({"dim", dir.file("mixed.json"), "--method", "both"}).out == "dimension: 3\n");
  }

  TEST_CASE("oracle command") {
    const Result fib = run({"oracle", data("fibonacci.json")});
    CHECK(fib.code == 0);
    CHECK(contains(fib.out, "value 2, stabilized\n"));
    CHECK_FALSE(contains(fib.out, "caveat"));
    CHECK(run({"oracle", data("fibonacci.json"), "--json"}).out ==
          run({"oracle", data("fibonacci.json"), "--json"}).out);

    TempDir dir;
    run({"construct", "signal", "-o", dir.file("sig.json")});
    const Result zero = run({"oracle", dir.file("sig.json"), "--oracle-cmd", oracle("zeros.py")});
    CHECK(zero.code == 0);
    CHECK(contains(zero.out, "value 1, stabilized\n"));
    CHECK(contains(zero.out, "caveat:"));
    CHECK(run({"oracle", dir.file("sig.json")}).code == 3);
    CHECK(run({"oracle", dir.file("sig.json"), "--oracle-cmd", oracle("malformed.py")}).code == 3);

    run({"construct", "signal", "--oracle-cmd", oracle("indicator.py", "5"), "-o",
         dir.file("sig5.json")});
    CHECK(contains(run({"oracle", dir.file("sig5.json")}).out, "value 0, stabilized"));
  }

  TEST_CASE("gallery") {
    const Result sig = run({"gallery", "signal", "--oracle-cmd", oracle("indicator.py", "5")});
    CHECK(sig.code == 0);
    CHECK(contains(sig.out, "observed dimension: 0 (stabilized)"));
    CHECK(contains(sig.out, "nonzero found at n=5"));
    const Result quiet = run({"gallery", "signal", "--oracle-cmd", oracle("zeros.py")});
    CHECK(contains(quiet.out, "observed dimension: 1 (stabilized)"));
    CHECK(contains(quiet.out, "no nonzero found"));
    CHECK(contains(run({"gallery", "thm4-finite", "--a", "1", "--b", "3", "--oracle-cmd",
                        oracle("zeros.py")})
                       .out,
                   "observed dimension: 3"));
    const Result inf = run({"gallery", "thm4-infinite", "--b", "2", "--oracle-cmd",
                            oracle("ones_except.py", "4")});
    CHECK(contains(inf.out, "cap_reached"));
    CHECK(contains(inf.out, "zero found at n=4"));
    CHECK(run({"gallery", "signal", "--oracle-cmd", oracle("malformed.py")}).code == 3);
    CHECK(run({"gallery", "nonsense", "--oracle-cmd", oracle("zeros.py")}).code == 2);
    const Result js = run({"gallery", "signal", "--json", "--oracle-cmd", oracle("indicator.py", "5")});
    CHECK(contains(js.out, "\"nonzero_at\":5"));
  }

  TEST_CASE("usage") {
    CHECK(run({}).code == 2);
    CHECK(run({"dim"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }
}
