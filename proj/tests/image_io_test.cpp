#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "sparrow/error.hpp"
#include "sparrow/image.hpp"

namespace sparrow {
namespace {

const std::string kData = SPARROW_TEST_DATA;

TEST(Ppm, DecodesGoldenFileWithComment) {
  const RasterImage img = decode_ppm(read_file(kData + "/tiny.ppm"));
  ASSERT_EQ(img.width, 3);
  ASSERT_EQ(img.height, 2);
  EXPECT_EQ(img.at(0, 0)[0], 255);
  EXPECT_EQ(img.at(1, 0)[1], 255);
  EXPECT_EQ(img.at(2, 0)[2], 255);
  EXPECT_EQ(img.at(2, 1)[0], 70);
  EXPECT_EQ(img.at(2, 1)[2], 90);
}

TEST(Ppm, EncodeIsCanonicalAndRoundTrips) {
  const RasterImage img = decode_ppm(read_file(kData + "/tiny.ppm"));
  const std::string bytes = encode_ppm(img);
  EXPECT_EQ(bytes.substr(0, 11), "P6\n3 2\n255\n");
  EXPECT_EQ(bytes.size(), 11u + 18u);
  EXPECT_EQ(decode_ppm(bytes), img);
}

TEST(Pgm, GoldenBytesRoundTrip) {
  const std::string golden = read_file(kData + "/tiny.pgm");
  const GrayImage g = decode_pgm(golden);
  ASSERT_EQ(g.width, 4);
  EXPECT_EQ(g.at(2, 0), 128);
  EXPECT_EQ(encode_pgm(g), golden);
}

TEST(MaskPgm, GoldenBytesRoundTrip) {
  const std::string golden = read_file(kData + "/tiny_mask.pgm");
  const BinaryMask m = decode_mask_pgm(golden);
  EXPECT_EQ(m.at(0, 0), 0);
  EXPECT_EQ(m.at(1, 0), 1);
  EXPECT_EQ(m.at(0, 1), 1);
  EXPECT_EQ(m.count(), 2u);
  EXPECT_EQ(encode_mask_pgm(m), golden);
}

TEST(Pnm, MalformedInputRejected) {
  EXPECT_THROW(decode_ppm("P5\n1 1\n255\n\x01"), ValidationError);
  EXPECT_THROW(decode_ppm("P6\n2 2\n255\n\x01\x02"), ValidationError);  // truncated
  EXPECT_THROW(decode_pgm("P5\n1 1\n65535\n\x01\x02"), ValidationError);
  EXPECT_THROW(decode_pgm("P5\n0 1\n255\n"), ValidationError);
  EXPECT_THROW(decode_pgm(""), ValidationError);
}

TEST(Files, WriteReadRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "sparrow_io_test.bin";
  const std::string bytes("a\0b\nc", 5);
  write_file(path.string(), bytes);
  EXPECT_EQ(read_file(path.string()), bytes);
  std::filesystem::remove(path);
  EXPECT_ANY_THROW(read_file(path.string()));
}

}  // namespace
}  // namespace sparrow
