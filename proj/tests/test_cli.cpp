#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "kqg/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = kqg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(field);
      field.clear();
    } else if (c == '\n') {
      row.push_back(field);
      field.clear();
      rows.push_back(row);
      row.clear();
    } else {
      field += c;
    }
  }
  return rows;
}

}  // namespace

TEST(Cli, CountExamples) {
  EXPECT_EQ(run({"count", "-m", "P3", "-d", "2,1"}).out, "q^2 + q + 1\n");
  EXPECT_EQ(run({"count", "-m", "R(p1,[2])", "-d", "1,1"}).out, "1\n");
  EXPECT_EQ(run({"count", "-m", "P0 + I0", "-d", "1,1"}).out, "1\n");
}

TEST(Cli, CountAtAndEuler) {
  const Result r = run({"count", "-m", "I1", "-d", "1,1", "--at", "4", "--euler"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "q + 1\nat q=4: 5\neuler: 2\n");
  const Result warn = run({"count", "-m", "I1", "-d", "1,1", "--at", "6"});
  EXPECT_EQ(warn.code, 3);
  EXPECT_EQ(warn.out, "q + 1\nat q=6: 7\n");
  EXPECT_NE(warn.err.find("not a prime power"), std::string::npos);
}

TEST(Cli, ParseErrorsExitTwoWithoutOutput) {
  const Result r = run({"count", "-m", "P1 + Q2", "-d", "1,0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("\n       ^\n"), std::string::npos);  // caret under column 5
  EXPECT_EQ(run({"count", "-m", "P1", "-d", "1"}).code, 2);
  EXPECT_EQ(run({"count", "-m", "P1"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"hall", "--lambda", "1,2", "--mu", "1", "--nu", "1"}).code, 2);
  EXPECT_EQ(run({"count", "-m", "P1", "-d", "1,0", "--format", "xml"}).code, 2);
}

TEST(Cli, TableExamples) {
  EXPECT_EQ(run({"table", "-m", "P1"}).out, "(0,0): 1\n(0,1): 0\n(1,0): q + 1\n(1,1): 0\n(2,0): 1\n(2,1): 1\n");
  EXPECT_EQ(run({"table", "-m", "I0"}).out, "(0,0): 1\n(0,1): 1\n");
  EXPECT_EQ(run({"table", "-m", "R(p1,[1])"}).out, "(0,0): 1\n(0,1): 0\n(1,0): 1\n(1,1): 1\n");
}

TEST(Cli, VerifyExamples) {
  Result r = run({"verify", "-m", "P2", "-p", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "ok: 12/12 dimension vectors agree over F_2\n");
  r = run({"verify", "-m", "R(p1@2,[1])", "-p", "2"});
  EXPECT_EQ(r.code, 0);
  r = run({"verify", "-m", "R(p1,[1]) + R(p2,[1]) + R(p3,[1]) + R(p4,[1])", "-p", "2"});
  EXPECT_EQ(r.code, 5);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("only 3 point(s) of degree 1"), std::string::npos);
  r = run({"verify", "-m", "P1 + I1", "-p", "3", "-d", "1,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "ok: 1/1 dimension vectors agree over F_3\n");
  EXPECT_EQ(run({"verify", "-m", "P1", "-p", "4"}).code, 2);
}

TEST(Cli, HallExamples) {
  EXPECT_EQ(run({"hall", "--lambda", "1,1", "--mu", "1", "--nu", "1"}).out, "x + 1\n");
  EXPECT_EQ(run({"hall", "--lambda", "2", "--mu", "1", "--nu", "1"}).out, "1\n");
  EXPECT_EQ(run({"hall", "--lambda", "2", "--mu", "2", "--nu", "1"}).out, "0\n");
}

TEST(Cli, HomExt) {
  EXPECT_EQ(run({"homext", "I2", "P1"}).out, "hom 0\next 5\n");
  EXPECT_EQ(run({"homext", "R(p,[2])", "R(p,[3])"}).out, "hom 2\next 2\n");
}

TEST(Cli, PolynomialStringsRoundTrip) {
  const Result r = run({"table", "-m", "P1 + R(a,[2]) + I0", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& e : j["entries"]) {
    const std::string s = e["polynomial"];
    EXPECT_EQ(kqg::LaurentPoly::parse(s).to_string(), s);
  }
}

TEST(Cli, CsvAndJsonCarryTheSameData) {
  const std::vector<std::string> module = {"-m", "P1 + R(a,[1]) + I0"};
  auto with = [&](std::vector<std::string> head, const char* fmt) {
    head.insert(head.end(), module.begin(), module.end());
    head.push_back("--format");
    head.push_back(fmt);
    return run(head);
  };
  {
    const auto j = nlohmann::json::parse(with({"table"}, "json").out);
    const auto rows = parse_csv(with({"table"}, "csv").out);
    ASSERT_EQ(rows.size(), j["entries"].size() + 1);
    for (std::size_t i = 0; i < j["entries"].size(); ++i) {
      const auto& e = j["entries"][i];
      EXPECT_EQ(rows[i + 1][0], j["module"].get<std::string>());
      EXPECT_EQ(rows[i + 1][1], std::to_string(e["a"].get<long>()));
      EXPECT_EQ(rows[i + 1][2], std::to_string(e["b"].get<long>()));
      EXPECT_EQ(rows[i + 1][3], e["polynomial"].get<std::string>());
    }
  }
  {
    const auto j = nlohmann::json::parse(with({"verify", "-p", "3"}, "json").out);
    const auto rows = parse_csv(with({"verify", "-p", "3"}, "csv").out);
    ASSERT_EQ(rows.size(), j.size() + 1);
    for (std::size_t i = 0; i < j.size(); ++i) {
      EXPECT_EQ(rows[i + 1][4], j[i]["count"].get<std::string>());
      EXPECT_EQ(rows[i + 1][5], j[i]["engine"].get<std::string>());
      EXPECT_EQ(rows[i + 1][6], j[i]["match"].get<bool>() ? "true" : "false");
    }
  }
  {
    const auto j = nlohmann::json::parse(with({"count", "-d", "1,1", "--euler", "--at", "3"}, "json").out);
    const auto rows = parse_csv(with({"count", "-d", "1,1", "--euler", "--at", "3"}, "csv").out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[1][3], j["polynomial"].get<std::string>());
    EXPECT_EQ(rows[1][5], j["value_at"]["value"].get<std::string>());
    EXPECT_EQ(rows[1][6], j["euler"].get<std::string>());
  }
}

TEST(Cli, NoCacheGivesSameAnswer) {
  EXPECT_EQ(run({"table", "-m", "P1 + I1 + R(a,[1])", "--no-cache"}).out, run({"table", "-m", "P1 + I1 + R(a,[1])"}).out);
}
