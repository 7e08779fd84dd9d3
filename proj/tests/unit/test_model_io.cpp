#include <filesystem>
#include <string>

#include <gtest/gtest.h>

#include "sdn/error.hpp"
#include "sdn/model.hpp"
#include "sdn/trainer.hpp"
#include "synthetic_shapes.hpp"

namespace sdn {
namespace {

TEST(ModelText, GoldenLayout) {
  const SdnModel m({{{1, 2}, 0.5, 3.25, Label::Foreground}, {{0, 7}, 12.125, 1e-3, Label::Background}},
                   ModelConstants{0.05, 1000.0, 2.85}, 9, 8);
  EXPECT_EQ(format_model(m),
            "SDN v1 9 8 0.05 1000 2.85\n"
            "1 2 0.5 3.25 1\n"
            "0 7 12.125 0.001 -1\n");
}

TEST(ModelText, SaveLoadSaveIsByteIdentical) {
  const auto model = train_image(testing::ring40(), TrainConfig{}).model;
  const auto dir = std::filesystem::temp_directory_path();
  const auto first = dir / "sdn_io_first.sdn";
  const auto second = dir / "sdn_io_second.sdn";
  save_model(model, first);
  const auto loaded = load_model(first);
  save_model(loaded, second);
  EXPECT_EQ(format_model(loaded), format_model(model));
  EXPECT_EQ(format_model(load_model(second)), format_model(model));
  EXPECT_EQ(pixel_error(loaded, testing::ring40()), 0u);
  std::filesystem::remove(first);
  std::filesystem::remove(second);
}

void expect_format_error(const std::string& text, const std::string& fragment) {
  try {
    parse_model(text);
    FAIL() << "expected FormatError for: " << text;
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

TEST(ModelText, ParseErrorsNameTheLine) {
  expect_format_error("", "line 1");
  expect_format_error("SDN v2 1 1 0.05 1000 2.85\n", "line 1");
  expect_format_error("SDN v1 1 1 0.05 1000\n", "line 1");
  expect_format_error("SDN v1 4 4 0.05 1000 2.85\n1 1 1 1 1\n1 1 x 1 1\n", "line 3");
  expect_format_error("SDN v1 4 4 0.05 1000 2.85\n1 1 1 1 0\n", "line 2");
  expect_format_error("SDN v1 4 4 0.05 1000 2.85\n1 1 1 1\n", "line 2");
}

TEST(ModelText, InvalidValuesAreRejected) {
  EXPECT_THROW(parse_model("SDN v1 4 4 0.05 1000 2.85\n1 1 -1 1 1\n"), Error);
  EXPECT_THROW(parse_model("SDN v1 0 4 0.05 1000 2.85\n"), Error);
  EXPECT_THROW(load_model("/nonexistent/model.sdn"), IoError);
}

}  // namespace
}  // namespace sdn
