#include <gtest/gtest.h>

#include <functional>

#include "ncfrob/format.hpp"
#include "ncfrob/json_io.hpp"
#include "ncfrob/nsy.hpp"
#include "support.hpp"

using namespace ncfrob;
using io::Json;

namespace {

std::string error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

Json b22_11() {
    const auto a = nsy::build({2, 2, {1, 1}});
    auto c = nsy::delta(a);
    c.counit = nsy::epsilon(a);
    return io::to_json(c);
}

}  // namespace

TEST(JsonIo, NsyRoundTripIsByteIdentical) {
    for (const auto& p : testsupport::sweep_grid(3, 3, 2)) {
        const auto a = nsy::build(p);
        auto c = nsy::delta(a);
        c.counit = nsy::epsilon(a);
        const std::string first = io::dump(io::to_json(c));
        const auto back = io::comult_from_json(io::parse(first));
        EXPECT_EQ(back.delta, c.delta);
        EXPECT_EQ(back.counit, c.counit);
        EXPECT_EQ(back.algebra->labels(), a.data->labels());
        EXPECT_EQ(io::dump(io::to_json(back)), first) << nsy::format_params(p);
    }
}

TEST(JsonIo, WeakHopfRoundTripIsByteIdentical) {
    for (const auto& f : testsupport::all_weak_hopf_fixtures()) {
        const std::string first = io::dump(io::to_json(f.hopf));
        const auto back = io::weak_hopf_from_json(io::parse(first));
        EXPECT_EQ(back.delta_wk, f.hopf.delta_wk);
        EXPECT_EQ(back.antipode, f.hopf.antipode);
        EXPECT_EQ(io::dump(io::to_json(back)), first) << f.name;
    }
}

TEST(JsonIo, GroupoidRoundTrip) {
    for (const auto& spec : small_groupoid_fixtures(3)) {
        const auto g = groupoid_from_components(spec);
        const std::string first = io::dump(io::to_json(g));
        const auto back = io::groupoid_from_json(io::parse(first));
        EXPECT_EQ(back.size(), g.size());
        EXPECT_EQ(io::dump(io::to_json(back)), first);
    }
}

TEST(JsonIo, RationalsAreStrings) {
    const auto q = qtg::named_instance("trivial", "matrix:2");
    const Json j = io::to_json(qtg::build(q));
    bool saw_fraction = false;
    for (const auto& entry : j["delta_wk"]) {
        ASSERT_TRUE(entry[2].is_string());
        if (entry[2].get<std::string>() == "1/2") saw_fraction = true;
    }
    EXPECT_TRUE(saw_fraction);
}

TEST(JsonIo, DefaultLabelsAndIntegerCoefficients) {
    const Json j = io::parse(R"({"dim": 1, "mult": [[0, 0, 0, 1]], "unit": [[0, "1"]], "delta": [[0, 0, 1]]})");
    const auto c = io::comult_from_json(j);
    EXPECT_EQ(c.algebra->label(0), "e0");
    EXPECT_EQ(classify(c), FrobeniusClass::Frobenius);
}

TEST(JsonIo, SchemaErrorsCarryPointer) {
    Json j = b22_11();
    j.erase("delta");
    EXPECT_EQ(error_of([&] { io::comult_from_json(j); }).rfind("/delta:", 0), 0u);

    j = b22_11();
    j["mult"][2][0] = 7;
    EXPECT_EQ(error_of([&] { io::comult_from_json(j); }).rfind("/mult/2/0:", 0), 0u);

    j = b22_11();
    j["mult"][1][3] = "1/0";
    EXPECT_EQ(error_of([&] { io::comult_from_json(j); }).rfind("/mult/1/3:", 0), 0u);

    j = b22_11();
    j["dim"] = 0;
    EXPECT_EQ(error_of([&] { io::comult_from_json(j); }).rfind("/dim:", 0), 0u);

    j = b22_11();
    j["labels"].erase(0);
    EXPECT_EQ(error_of([&] { io::comult_from_json(j); }).rfind("/labels:", 0), 0u);

    j = b22_11();
    j["counit"][0] = Json::array({0});
    EXPECT_EQ(error_of([&] { io::comult_from_json(j); }).rfind("/counit/0:", 0), 0u);

    EXPECT_THROW(io::comult_from_json(Json::array()), io::SchemaError);
}

TEST(JsonIo, GroupoidSchemaErrors) {
    Json j = io::to_json(pair_groupoid(2));
    j["morphisms"][0]["src"] = 5;
    EXPECT_EQ(error_of([&] { io::groupoid_from_json(j); }).rfind("/morphisms/0/src:", 0), 0u);
    j = io::to_json(pair_groupoid(2));
    j["inv"].erase(1);
    EXPECT_NE(error_of([&] { io::groupoid_from_json(j); }).find("inverse"), std::string::npos);
}

TEST(JsonIo, MalformedTextReportsLocation) {
    const std::string msg = error_of([] { io::parse("{\n  \"dim\": 2,\n  oops\n}"); });
    EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
}

TEST(JsonIo, MissingFile) { EXPECT_THROW(io::read_input("/nonexistent/file.json"), InputError); }

TEST(Format, Combination) {
    const std::vector<std::string> labels{"a", "b", "c"};
    Vector v(3);
    EXPECT_EQ(fmt::combination(v, labels), "0");
    v.set(0, 2);
    v.set(2, -1);
    EXPECT_EQ(fmt::combination(v, labels), "2*a - c");
    v.set(1, Scalar(-1, 2));
    EXPECT_EQ(fmt::combination(v, labels), "2*a - 1/2*b - c");
}

TEST(Format, TensorCombination) {
    const std::vector<std::string> labels{"a", "b"};
    Vector v(4);
    v.set(1, 1);
    v.set(2, 3);
    EXPECT_EQ(fmt::tensor_combination(v, labels, 2), "a ⊗ b + 3*(b ⊗ a)");
}

TEST(Format, RenderMarkdownAndCsv) {
    const fmt::Table t{{"x", "y"}, {{"a|b", "1, 2"}, {"q\"", "z"}}};
    EXPECT_EQ(fmt::render(t, fmt::Format::Markdown), "| x | y |\n|---|---|\n| a\\|b | 1, 2 |\n| q\" | z |\n");
    EXPECT_EQ(fmt::render(t, fmt::Format::Csv), "x,y\na|b,\"1, 2\"\n\"q\"\"\",z\n");
    EXPECT_THROW(fmt::parse_format("yaml"), InputError);
    EXPECT_EQ(fmt::parse_format("md"), fmt::Format::Markdown);
}
