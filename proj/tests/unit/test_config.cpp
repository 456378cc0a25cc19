#include <doctest.h>

#include "inkseg/config.hpp"

using namespace inkseg;

TEST_CASE("defaults are the reference thresholds") {
    const Config c;
    CHECK(c.tau_cw == -0.1);
    CHECK(c.tau_ccw == 0.1);
    CHECK(c.tau_cw_ip == 6);
    CHECK(c.tau_ccw_ip == 6);
    CHECK(c.tau_su_len == 14);
    CHECK(c.tau_rldc == 105.0);
    CHECK(c.tau_tdc_lower == 180.0);
    CHECK(c.tau_tdc_upper == 0.0);
    CHECK(c.tau_delta == 0.04);
    CHECK(c.tau_mdc == 3);
    CHECK(c.tau_lv == 5);
    CHECK_NOTHROW(c.validate());
}

TEST_CASE("config json") {
    const Config c;
    CHECK(parse_config(config_to_json(c)) == c);
    CHECK(parse_config("{}") == c);
    const Config t = parse_config(R"({"tau_rldc": 120, "normalize": "per_axis"})");
    CHECK(t.tau_rldc == 120.0);
    CHECK(t.normalize == NormalizeMode::PerAxis);
    CHECK_THROWS_AS(parse_config(R"({"tau_nope": 1})"), InkError);
    CHECK_THROWS_AS(parse_config("[1]"), InkError);
}

TEST_CASE("overrides") {
    Config c;
    apply_setting(c, "tau_su_len=20");
    CHECK(c.tau_su_len == 20);
    apply_setting(c, "tau_delta=0.05");
    CHECK(c.tau_delta == 0.05);
    CHECK_THROWS_AS(apply_setting(c, "tau_su_len"), InkError);
    CHECK_THROWS_AS(apply_setting(c, "bogus=1"), InkError);
}

TEST_CASE("validation") {
    Config c;
    c.delta = 0.0;
    CHECK_THROWS_AS(c.validate(), InkError);
    c = Config{};
    c.smooth_window = 4;
    CHECK_THROWS_AS(c.validate(), InkError);
}
