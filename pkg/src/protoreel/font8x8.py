"""Embedded 8x8 bitmap glyphs for printable ASCII 0x20-0x7E.

Each glyph is 8 row bytes, most significant bit = leftmost pixel.
"""

GLYPH_WIDTH = 8
GLYPH_HEIGHT = 8

GLYPHS: dict[int, tuple[int, ...]] = {
    0x20: (0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00),  # ' '
    0x21: (0x00, 0x60, 0x60, 0x60, 0x60, 0x00, 0x60, 0x00),  # '!'
    0x22: (0x00, 0x50, 0x50, 0x50, 0x00, 0x00, 0x00, 0x00),  # '"'
    0x23: (0x50, 0x50, 0xF8, 0x50, 0x50, 0xF8, 0x50, 0x50),  # '#'
    0x24: (0x78, 0xC8, 0xF0, 0x78, 0x18, 0xD8, 0xF0, 0x20),  # '$'
    0x25: (0xE0, 0xA8, 0xF0, 0x20, 0x78, 0xA8, 0x38, 0x00),  # '%'
    0x26: (0x00, 0x70, 0xC0, 0x60, 0xF8, 0xB0, 0xF8, 0x00),  # '&'
    0x27: (0x30, 0x20, 0x40, 0x00, 0x00, 0x00, 0x00, 0x00),  # '\''
    0x28: (0x10, 0x20, 0x60, 0x60, 0x60, 0x60, 0x20, 0x10),  # '('
    0x29: (0x40, 0x20, 0x30, 0x30, 0x30, 0x30, 0x20, 0x40),  # ')'
    0x2A: (0x20, 0xF0, 0x60, 0x90, 0x00, 0x00, 0x00, 0x00),  # '*'
    0x2B: (0x00, 0x20, 0x20, 0xF8, 0x20, 0x20, 0x00, 0x00),  # '+'
    0x2C: (0x00, 0x00, 0x00, 0x00, 0x00, 0x30, 0x20, 0x40),  # ','
    0x2D: (0x00, 0x00, 0x00, 0xF8, 0x00, 0x00, 0x00, 0x00),  # '-'
    0x2E: (0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x60, 0x00),  # '.'
    0x2F: (0x08, 0x08, 0x10, 0x10, 0x20, 0x20, 0x40, 0x40),  # '/'
    0x30: (0x70, 0xD8, 0xD8, 0xD8, 0xD8, 0xD8, 0x70, 0x00),  # '0'
    0x31: (0x30, 0xF0, 0x30, 0x30, 0x30, 0x30, 0xFC, 0x00),  # '1'
    0x32: (0x70, 0xD8, 0x18, 0x30, 0x60, 0xD8, 0xF8, 0x00),  # '2'
    0x33: (0x70, 0xD8, 0x18, 0x70, 0x18, 0xD8, 0x70, 0x00),  # '3'
    0x34: (0x18, 0x38, 0x58, 0xD8, 0xFC, 0x18, 0x18, 0x00),  # '4'
    0x35: (0xF8, 0xC0, 0xF0, 0xD8, 0x18, 0x98, 0xF0, 0x00),  # '5'
    0x36: (0x70, 0xD8, 0xC0, 0xF0, 0xD8, 0xD8, 0x70, 0x00),  # '6'
    0x37: (0xF8, 0xD8, 0x18, 0x30, 0x30, 0x60, 0x60, 0x00),  # '7'
    0x38: (0x70, 0xD8, 0xD8, 0x70, 0xD8, 0xD8, 0x70, 0x00),  # '8'
    0x39: (0x70, 0xD8, 0xD8, 0x78, 0x18, 0xD8, 0x70, 0x00),  # '9'
    0x3A: (0x00, 0x00, 0x00, 0x60, 0x00, 0x00, 0x60, 0x00),  # ':'
    0x3B: (0x00, 0x00, 0x60, 0x00, 0x00, 0x60, 0x40, 0x80),  # ';'
    0x3C: (0x00, 0x30, 0x60, 0xC0, 0x60, 0x30, 0x00, 0x00),  # '<'
    0x3D: (0x00, 0x00, 0xF0, 0x00, 0xF0, 0x00, 0x00, 0x00),  # '='
    0x3E: (0x00, 0x60, 0x30, 0x18, 0x30, 0x60, 0x00, 0x00),  # '>'
    0x3F: (0x00, 0x70, 0x98, 0x30, 0x60, 0x00, 0x60, 0x00),  # '?'
    0x40: (0x70, 0xC8, 0x98, 0xA8, 0xA8, 0x9C, 0xC0, 0x70),  # '@'
    0x41: (0x00, 0xF0, 0x70, 0x50, 0xF8, 0xD8, 0xDC, 0x00),  # 'A'
    0x42: (0x00, 0xF0, 0xD8, 0xF0, 0xD8, 0xD8, 0xF0, 0x00),  # 'B'
    0x43: (0x00, 0x78, 0xD8, 0xC0, 0xC0, 0xD8, 0x70, 0x00),  # 'C'
    0x44: (0x00, 0xF0, 0xD8, 0xD8, 0xD8, 0xD8, 0xF0, 0x00),  # 'D'
    0x45: (0x00, 0xF8, 0xC0, 0xF0, 0xC0, 0xD8, 0xF8, 0x00),  # 'E'
    0x46: (0x00, 0xF8, 0xC0, 0xF0, 0xC0, 0xC0, 0xE0, 0x00),  # 'F'
    0x47: (0x00, 0x70, 0xD8, 0xC0, 0xF8, 0xD8, 0x78, 0x00),  # 'G'
    0x48: (0x00, 0xDC, 0xD8, 0xF8, 0xD8, 0xD8, 0xDC, 0x00),  # 'H'
    0x49: (0x00, 0xF0, 0x60, 0x60, 0x60, 0x60, 0xF0, 0x00),  # 'I'
    0x4A: (0x00, 0x78, 0x30, 0x30, 0xB0, 0xB0, 0xE0, 0x00),  # 'J'
    0x4B: (0x00, 0xD8, 0xD0, 0xE0, 0xF0, 0xD8, 0xEC, 0x00),  # 'K'
    0x4C: (0x00, 0xE0, 0xC0, 0xC0, 0xC0, 0xD8, 0xF8, 0x00),  # 'L'
    0x4D: (0x00, 0x88, 0xD8, 0xD8, 0xF8, 0xA8, 0xA8, 0x00),  # 'M'
    0x4E: (0x00, 0xDC, 0xE8, 0xE8, 0xD8, 0xD8, 0xC8, 0x00),  # 'N'
    0x4F: (0x00, 0x70, 0xD8, 0xD8, 0xD8, 0xD8, 0x70, 0x00),  # 'O'
    0x50: (0x00, 0xF0, 0xD8, 0xD8, 0xF0, 0xC0, 0xE0, 0x00),  # 'P'
    0x51: (0x00, 0x70, 0xD8, 0xD8, 0xD8, 0xD8, 0x70, 0x18),  # 'Q'
    0x52: (0x00, 0xF0, 0xD8, 0xD8, 0xF0, 0xD8, 0xEC, 0x00),  # 'R'
    0x53: (0x00, 0x78, 0xC8, 0xF0, 0x38, 0x98, 0xF0, 0x00),  # 'S'
    0x54: (0x00, 0xF8, 0x68, 0x60, 0x60, 0x60, 0xF0, 0x00),  # 'T'
    0x55: (0x00, 0xDC, 0xD8, 0xD8, 0xD8, 0xD8, 0x70, 0x00),  # 'U'
    0x56: (0x00, 0xDC, 0xD8, 0x50, 0x70, 0x70, 0x20, 0x00),  # 'V'
    0x57: (0x00, 0xAC, 0xA8, 0xA8, 0xF8, 0x70, 0x50, 0x00),  # 'W'
    0x58: (0x00, 0xCC, 0x78, 0x30, 0x30, 0x78, 0xCC, 0x00),  # 'X'
    0x59: (0x00, 0xCC, 0xCC, 0x78, 0x30, 0x30, 0x78, 0x00),  # 'Y'
    0x5A: (0x00, 0xF8, 0xD8, 0x30, 0x60, 0xD8, 0xF8, 0x00),  # 'Z'
    0x5B: (0x70, 0x60, 0x60, 0x60, 0x60, 0x60, 0x60, 0x70),  # '['
    0x5C: (0x80, 0x80, 0x40, 0x40, 0x20, 0x20, 0x10, 0x10),  # '\\'
    0x5D: (0x70, 0x30, 0x30, 0x30, 0x30, 0x30, 0x30, 0x70),  # ']'
    0x5E: (0x20, 0x70, 0xD8, 0x00, 0x00, 0x00, 0x00, 0x00),  # '^'
    0x5F: (0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0xFC),  # '_'
    0x60: (0x60, 0x20, 0x10, 0x00, 0x00, 0x00, 0x00, 0x00),  # '`'
    0x61: (0x00, 0x00, 0x70, 0xD8, 0x78, 0xD8, 0xFC, 0x00),  # 'a'
    0x62: (0xC0, 0xC0, 0xF0, 0xD8, 0xD8, 0xD8, 0xF0, 0x00),  # 'b'
    0x63: (0x00, 0x00, 0x70, 0xD8, 0xC0, 0xD8, 0x70, 0x00),  # 'c'
    0x64: (0x38, 0x18, 0x78, 0xD8, 0xD8, 0xD8, 0x7C, 0x00),  # 'd'
    0x65: (0x00, 0x00, 0x70, 0xD8, 0xF8, 0xC0, 0x78, 0x00),  # 'e'
    0x66: (0x38, 0x60, 0xF8, 0x60, 0x60, 0x60, 0xF8, 0x00),  # 'f'
    0x67: (0x00, 0x6C, 0xD8, 0xD8, 0xD8, 0x78, 0x18, 0xF0),  # 'g'
    0x68: (0xC0, 0xC0, 0xF0, 0xD8, 0xD8, 0xD8, 0xD8, 0x00),  # 'h'
    0x69: (0x30, 0x00, 0xF0, 0x30, 0x30, 0x30, 0xFC, 0x00),  # 'i'
    0x6A: (0x30, 0x00, 0xF0, 0x30, 0x30, 0x30, 0x30, 0x30),  # 'j'
    0x6B: (0xC0, 0xC0, 0xD8, 0xF0, 0xE0, 0xF0, 0xDC, 0x00),  # 'k'
    0x6C: (0xF0, 0x30, 0x30, 0x30, 0x30, 0x30, 0xFC, 0x00),  # 'l'
    0x6D: (0x00, 0x00, 0xF0, 0xF8, 0xA8, 0xA8, 0xA8, 0x00),  # 'm'
    0x6E: (0x00, 0x00, 0xB0, 0xD8, 0xD8, 0xD8, 0xD8, 0x00),  # 'n'
    0x6F: (0x00, 0x00, 0x70, 0xD8, 0xD8, 0xD8, 0x70, 0x00),  # 'o'
    0x70: (0x00, 0xF0, 0xD8, 0xD8, 0xD8, 0xF0, 0xC0, 0xE0),  # 'p'
    0x71: (0x00, 0x6C, 0xD8, 0xD8, 0xD8, 0x78, 0x18, 0x3C),  # 'q'
    0x72: (0x00, 0x00, 0xDC, 0x74, 0x60, 0x60, 0xF0, 0x00),  # 'r'
    0x73: (0x00, 0x00, 0x78, 0xE0, 0x78, 0x1C, 0xF8, 0x00),  # 's'
    0x74: (0x60, 0x60, 0xF8, 0x60, 0x60, 0x6C, 0x38, 0x00),  # 't'
    0x75: (0x00, 0x00, 0xD8, 0xD8, 0xD8, 0xD8, 0x7C, 0x00),  # 'u'
    0x76: (0x00, 0x00, 0xD8, 0xD8, 0x70, 0x70, 0x20, 0x00),  # 'v'
    0x77: (0x00, 0x00, 0xAC, 0xA8, 0xF8, 0x78, 0x50, 0x00),  # 'w'
    0x78: (0x00, 0x00, 0xEC, 0x78, 0x30, 0x78, 0xDC, 0x00),  # 'x'
    0x79: (0x00, 0xDC, 0xD8, 0xD8, 0x50, 0x70, 0x60, 0xC0),  # 'y'
    0x7A: (0x00, 0x00, 0xF8, 0xB0, 0x60, 0xD8, 0xF8, 0x00),  # 'z'
    0x7B: (0x18, 0x30, 0x30, 0x60, 0x30, 0x30, 0x30, 0x18),  # '{'
    0x7C: (0x00, 0x20, 0x20, 0x20, 0x20, 0x20, 0x20, 0x20),  # '|'
    0x7D: (0xC0, 0x60, 0x60, 0x30, 0x60, 0x60, 0x60, 0xC0),  # '}'
    0x7E: (0x00, 0x00, 0x68, 0xB0, 0x00, 0x00, 0x00, 0x00),  # '~'
}

