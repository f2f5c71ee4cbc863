#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tqp/errors.hpp"

namespace tqp {

// One luma plane, 8-bit samples in row-major order.
struct FramePlane {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> samples; // size == width * height

    std::uint8_t at(int x, int y) const { return samples[static_cast<std::size_t>(y) * width + x]; }
};

struct FrameRate {
    int num = 30;
    int den = 1;

    double fps() const { return static_cast<double>(num) / den; }
};

// A video segment as an ordered run of equally sized luma planes.
struct SegmentSource {
    std::vector<FramePlane> frames;
    FrameRate frame_rate;

    int width() const { return frames.empty() ? 0 : frames.front().width; }
    int height() const { return frames.empty() ? 0 : frames.front().height; }
    int frame_count() const { return static_cast<int>(frames.size()); }
    double segment_seconds() const {
        return frame_rate.num > 0 ? frames.size() * frame_rate.den / static_cast<double>(frame_rate.num) : 0.0;
    }
};

// Incremental Y4M reader. The header is parsed on construction; frames are
// pulled one at a time so callers never have to hold a whole segment.
// Only 8-bit 4:2:0 streams are accepted; chroma planes are skipped unread.
class Y4mReader {
public:
    explicit Y4mReader(std::istream& in);

    int width() const { return width_; }
    int height() const { return height_; }
    FrameRate frame_rate() const { return rate_; }

    // Next luma plane, or nullopt at clean end of stream.
    std::optional<FramePlane> next_frame();

private:
    std::istream& in_;
    int width_ = 0;
    int height_ = 0;
    FrameRate rate_;
    int frames_read_ = 0;
};

// Headerless I420 reader; dimensions and rate come from the caller.
class RawYuvReader {
public:
    RawYuvReader(std::istream& in, int width, int height, FrameRate rate);

    std::optional<FramePlane> next_frame();

private:
    std::istream& in_;
    int width_ = 0;
    int height_ = 0;
    int frames_read_ = 0;
};

SegmentSource parse_y4m(std::istream& in);
SegmentSource parse_raw_yuv(std::istream& in, int width, int height, FrameRate rate);

// Serializes a segment back to Y4M (C420, neutral chroma). Round-tripping
// through parse_y4m reproduces the luma planes byte for byte.
void write_y4m(const SegmentSource& segment, std::ostream& out);

} // namespace tqp
