#include <gtest/gtest.h>

#include <sstream>

#include "ksec/serialization.hpp"

using namespace ksec;

TEST(InstanceJson, RoundTripsExactly) {
  const Instance inst = make_instance({InstanceKind::UniformRandom, 25, 3, 0.0, 1.0, 8}).with_dummies(2);
  const Json j = to_json(inst);
  EXPECT_EQ(j["capacity"], 3);
  EXPECT_TRUE(j["items"][0]["value"].is_string());
  const Instance back = instance_from_json(Json::parse(j.dump()));
  ASSERT_EQ(back.size(), inst.size());
  for (int i = 1; i <= inst.size(); ++i) {
    EXPECT_EQ(back.item(i).value, inst.item(i).value);
    EXPECT_EQ(back.item(i).size, inst.item(i).size);
    EXPECT_EQ(back.item(i).dummy, inst.item(i).dummy);
  }
}

TEST(InstanceJson, MalformedInputIsAnError) {
  EXPECT_THROW(instance_from_json(Json::parse(R"({"items": []})")), Error);
  EXPECT_THROW(instance_from_json(Json::parse(R"({"capacity": 2, "items": [{"value": "abc", "size": 1}]})")), Error);
}

TEST(OutcomeJson, Shape) {
  SelectionOutcome out;
  out.packed = {{3, 1, false}, {5, 2, true}};
  out.totalValue = 0.25;
  Json j = to_json(out);
  EXPECT_EQ(j["packed"][0]["id"], 3);
  EXPECT_EQ(j["packed"][1]["pos"], 2);
  EXPECT_TRUE(j["referenceValue"].is_null());
  out.referenceValue = 0.5;
  EXPECT_EQ(to_json(out)["referenceValue"], "0.5");
}

TEST(TableJson, RationalsAsStrings) {
  const Instance inst(2, {{2.0, 2}, {1.0, 2}});
  const Json j = to_json(enumerate_exact(inst, 0.5));
  EXPECT_EQ(j["items"][0]["p"][0]["num"], "1");
  EXPECT_EQ(j["items"][0]["p"][0]["den"], "2");
  EXPECT_EQ(j["items"][1]["P"]["num"], "0");
  EXPECT_EQ(j["orders"], "2");
}

TEST(ReportCsv, HeadersAlwaysPresent) {
  const Instance inst(2, {{2.0, 2}, {1.0, 2}});
  const EstimateReport r = estimate({AlgorithmKind::Extended, 0.5}, inst, 100, 1, 1);
  std::ostringstream os;
  write_estimate_csv(os, r);
  EXPECT_EQ(os.str().rfind("algorithm,trials,mean_ratio,std_error,seed\n", 0), 0u);
  EXPECT_NE(os.str().find("item,prob,count\n"), std::string::npos);
  const Json j = to_json(r);
  EXPECT_TRUE(j.contains("stdError"));

  std::ostringstream lp;
  write_convergence_csv(lp, convergence_report({2, 6000}));
  const std::string csv = lp.str();
  EXPECT_EQ(csv.rfind("k,primal,dual,scale,tau\n2,0.5,0.5,1,2\n", 0), 0u);
  EXPECT_NE(csv.find("\n6000,,"), std::string::npos);
}

TEST(ExactReal, RoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, 2.718281828459045, 1e-300}) EXPECT_EQ(std::stod(exact_real(v)), v);
}
