#include "tqp/video_io.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

namespace tqp {

namespace {

constexpr int kMaxDimension = 1 << 16;

std::size_t chroma_plane_bytes(int width, int height) {
    // 4:2:0, ceil division for odd dimensions.
    return static_cast<std::size_t>((width + 1) / 2) * ((height + 1) / 2);
}

int parse_int_tag(std::string_view text, const char* tag) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ParseError(std::string("bad ") + tag + " tag in Y4M header: '" + std::string(text) + "'");
    return value;
}

FrameRate parse_rate_tag(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("bad F tag in Y4M header: '" + std::string(text) + "'");
    FrameRate rate;
    rate.num = parse_int_tag(text.substr(0, colon), "F");
    rate.den = parse_int_tag(text.substr(colon + 1), "F");
    if (rate.num <= 0 || rate.den <= 0)
        throw ParseError("non-positive Y4M frame rate");
    return rate;
}

bool chroma_tag_is_420_8bit(std::string_view tag) {
    return tag == "420" || tag == "420jpeg" || tag == "420mpeg2" || tag == "420paldv";
}

// Reads one newline-terminated line with a hard cap so hostile inputs
// cannot make us buffer unbounded data.
std::string read_line(std::istream& in, std::size_t cap, const char* what) {
    std::string line;
    char c = 0;
    while (in.get(c)) {
        if (c == '\n')
            return line;
        line.push_back(c);
        if (line.size() > cap)
            throw ParseError(std::string(what) + " exceeds " + std::to_string(cap) + " bytes");
    }
    throw TruncatedInput(std::string("stream ended inside ") + what);
}

} // namespace

Y4mReader::Y4mReader(std::istream& in) : in_(in) {
    std::string header;
    {
        char c = 0;
        while (in_.get(c) && c != '\n') {
            header.push_back(c);
            if (header.size() > 1024)
                throw ParseError("Y4M header line exceeds 1024 bytes");
        }
        if (c != '\n')
            throw ParseError("Y4M header line not newline-terminated");
    }

    constexpr std::string_view kMagic = "YUV4MPEG2";
    std::string_view view(header);
    if (view.substr(0, kMagic.size()) != kMagic)
        throw ParseError("missing YUV4MPEG2 signature");
    view.remove_prefix(kMagic.size());
    if (!view.empty() && view.front() != ' ')
        throw ParseError("malformed YUV4MPEG2 signature line");

    bool got_width = false;
    bool got_height = false;
    bool got_rate = false;
    while (!view.empty()) {
        while (!view.empty() && view.front() == ' ')
            view.remove_prefix(1);
        if (view.empty())
            break;
        auto end = view.find(' ');
        std::string_view tag = view.substr(0, end);
        view.remove_prefix(end == std::string_view::npos ? view.size() : end);

        switch (tag.front()) {
        case 'W':
            width_ = parse_int_tag(tag.substr(1), "W");
            got_width = true;
            break;
        case 'H':
            height_ = parse_int_tag(tag.substr(1), "H");
            got_height = true;
            break;
        case 'F':
            rate_ = parse_rate_tag(tag.substr(1));
            got_rate = true;
            break;
        case 'C': {
            std::string_view chroma = tag.substr(1);
            if (!chroma_tag_is_420_8bit(chroma))
                throw UnsupportedFormat("unsupported Y4M chroma/bit depth tag C" + std::string(chroma)
                                        + " (only 8-bit 4:2:0 is accepted)");
            break;
        }
        default:
            // I, A, X and any unknown tags are irrelevant to luma extraction.
            break;
        }
    }
    if (!got_width || !got_height || !got_rate)
        throw ParseError("Y4M header is missing a required W/H/F tag");
    if (width_ < 1 || height_ < 1)
        throw ParseError("Y4M dimensions must be positive");
    if (width_ > kMaxDimension || height_ > kMaxDimension)
        throw ParseError("Y4M dimensions exceed supported maximum");
}

std::optional<FramePlane> Y4mReader::next_frame() {
    char first = 0;
    if (!in_.get(first))
        return std::nullopt; // clean end of stream

    std::array<char, 5> marker = {first, 0, 0, 0, 0};
    if (!in_.read(marker.data() + 1, 4) || std::string_view(marker.data(), 5) != "FRAME")
        throw ParseError("expected FRAME record before frame " + std::to_string(frames_read_));
    read_line(in_, 1024, "FRAME parameter line"); // optional params, ignored

    FramePlane plane;
    plane.width = width_;
    plane.height = height_;
    plane.samples.resize(static_cast<std::size_t>(width_) * height_);
    if (!in_.read(reinterpret_cast<char*>(plane.samples.data()),
                  static_cast<std::streamsize>(plane.samples.size())))
        throw TruncatedInput("truncated luma payload in frame " + std::to_string(frames_read_));

    // Chroma is read past and dropped; features are luma-only.
    const auto chroma_bytes = static_cast<std::streamsize>(2 * chroma_plane_bytes(width_, height_));
    in_.ignore(chroma_bytes);
    if (in_.gcount() != chroma_bytes)
        throw TruncatedInput("truncated chroma payload in frame " + std::to_string(frames_read_));

    ++frames_read_;
    return plane;
}

RawYuvReader::RawYuvReader(std::istream& in, int width, int height, FrameRate rate)
    : in_(in), width_(width), height_(height) {
    if (width < 1 || height < 1)
        throw InvalidArgument("raw YUV dimensions must be positive");
    if (rate.num <= 0 || rate.den <= 0)
        throw InvalidArgument("raw YUV frame rate must be positive");
}

std::optional<FramePlane> RawYuvReader::next_frame() {
    FramePlane plane;
    plane.width = width_;
    plane.height = height_;
    plane.samples.resize(static_cast<std::size_t>(width_) * height_);

    in_.read(reinterpret_cast<char*>(plane.samples.data()),
             static_cast<std::streamsize>(plane.samples.size()));
    if (in_.gcount() == 0 && in_.eof())
        return std::nullopt;
    if (in_.gcount() != static_cast<std::streamsize>(plane.samples.size()))
        throw TruncatedInput("raw YUV stream ends inside frame " + std::to_string(frames_read_)
                             + " (stream size is not a multiple of the 4:2:0 frame size)");

    const auto chroma_bytes = static_cast<std::streamsize>(2 * chroma_plane_bytes(width_, height_));
    in_.ignore(chroma_bytes);
    if (in_.gcount() != chroma_bytes)
        throw TruncatedInput("raw YUV stream ends inside frame " + std::to_string(frames_read_)
                             + " (stream size is not a multiple of the 4:2:0 frame size)");

    ++frames_read_;
    return plane;
}

SegmentSource parse_y4m(std::istream& in) {
    Y4mReader reader(in);
    SegmentSource segment;
    segment.frame_rate = reader.frame_rate();
    while (auto frame = reader.next_frame())
        segment.frames.push_back(std::move(*frame));
    return segment;
}

SegmentSource parse_raw_yuv(std::istream& in, int width, int height, FrameRate rate) {
    RawYuvReader reader(in, width, height, rate);
    SegmentSource segment;
    segment.frame_rate = rate;
    while (auto frame = reader.next_frame())
        segment.frames.push_back(std::move(*frame));
    return segment;
}

void write_y4m(const SegmentSource& segment, std::ostream& out) {
    if (segment.frames.empty())
        throw InvalidArgument("cannot serialize an empty segment");
    const int width = segment.width();
    const int height = segment.height();
    out << "YUV4MPEG2 W" << width << " H" << height << " F" << segment.frame_rate.num << ':'
        << segment.frame_rate.den << " Ip A1:1 C420\n";

    const std::vector<std::uint8_t> chroma(2 * chroma_plane_bytes(width, height), 128);
    for (const FramePlane& frame : segment.frames) {
        if (frame.width != width || frame.height != height)
            throw InvalidArgument("segment frames differ in dimensions");
        out << "FRAME\n";
        out.write(reinterpret_cast<const char*>(frame.samples.data()),
                  static_cast<std::streamsize>(frame.samples.size()));
        out.write(reinterpret_cast<const char*>(chroma.data()),
                  static_cast<std::streamsize>(chroma.size()));
    }
}

} // namespace tqp
