//! Embedded lookup tables for the reference corpus, one array per
//! entry, row-major in the input (16 values per line).

pub(crate) const AES: [u16; 256] = [
    0x63, 0x7c, 0x77, 0x7b, 0xf2, 0x6b, 0x6f, 0xc5, 0x30, 0x01, 0x67, 0x2b, 0xfe, 0xd7, 0xab, 0x76,
    0xca, 0x82, 0xc9, 0x7d, 0xfa, 0x59, 0x47, 0xf0, 0xad, 0xd4, 0xa2, 0xaf, 0x9c, 0xa4, 0x72, 0xc0,
    0xb7, 0xfd, 0x93, 0x26, 0x36, 0x3f, 0xf7, 0xcc, 0x34, 0xa5, 0xe5, 0xf1, 0x71, 0xd8, 0x31, 0x15,
    0x04, 0xc7, 0x23, 0xc3, 0x18, 0x96, 0x05, 0x9a, 0x07, 0x12, 0x80, 0xe2, 0xeb, 0x27, 0xb2, 0x75,
    0x09, 0x83, 0x2c, 0x1a, 0x1b, 0x6e, 0x5a, 0xa0, 0x52, 0x3b, 0xd6, 0xb3, 0x29, 0xe3, 0x2f, 0x84,
    0x53, 0xd1, 0x00, 0xed, 0x20, 0xfc, 0xb1, 0x5b, 0x6a, 0xcb, 0xbe, 0x39, 0x4a, 0x4c, 0x58, 0xcf,
    0xd0, 0xef, 0xaa, 0xfb, 0x43, 0x4d, 0x33, 0x85, 0x45, 0xf9, 0x02, 0x7f, 0x50, 0x3c, 0x9f, 0xa8,
    0x51, 0xa3, 0x40, 0x8f, 0x92, 0x9d, 0x38, 0xf5, 0xbc, 0xb6, 0xda, 0x21, 0x10, 0xff, 0xf3, 0xd2,
    0xcd, 0x0c, 0x13, 0xec, 0x5f, 0x97, 0x44, 0x17, 0xc4, 0xa7, 0x7e, 0x3d, 0x64, 0x5d, 0x19, 0x73,
    0x60, 0x81, 0x4f, 0xdc, 0x22, 0x2a, 0x90, 0x88, 0x46, 0xee, 0xb8, 0x14, 0xde, 0x5e, 0x0b, 0xdb,
    0xe0, 0x32, 0x3a, 0x0a, 0x49, 0x06, 0x24, 0x5c, 0xc2, 0xd3, 0xac, 0x62, 0x91, 0x95, 0xe4, 0x79,
    0xe7, 0xc8, 0x37, 0x6d, 0x8d, 0xd5, 0x4e, 0xa9, 0x6c, 0x56, 0xf4, 0xea, 0x65, 0x7a, 0xae, 0x08,
    0xba, 0x78, 0x25, 0x2e, 0x1c, 0xa6, 0xb4, 0xc6, 0xe8, 0xdd, 0x74, 0x1f, 0x4b, 0xbd, 0x8b, 0x8a,
    0x70, 0x3e, 0xb5, 0x66, 0x48, 0x03, 0xf6, 0x0e, 0x61, 0x35, 0x57, 0xb9, 0x86, 0xc1, 0x1d, 0x9e,
    0xe1, 0xf8, 0x98, 0x11, 0x69, 0xd9, 0x8e, 0x94, 0x9b, 0x1e, 0x87, 0xe9, 0xce, 0x55, 0x28, 0xdf,
    0x8c, 0xa1, 0x89, 0x0d, 0xbf, 0xe6, 0x42, 0x68, 0x41, 0x99, 0x2d, 0x0f, 0xb0, 0x54, 0xbb, 0x16,
];

pub(crate) const WHIRLPOOL: [u16; 256] = [
    0x18, 0x23, 0xc6, 0xe8, 0x87, 0xb8, 0x01, 0x4f, 0x36, 0xa6, 0xd2, 0xf5, 0x79, 0x6f, 0x91, 0x52,
    0x60, 0xbc, 0x9b, 0x8e, 0xa3, 0x0c, 0x7b, 0x35, 0x1d, 0xe0, 0xd7, 0xc2, 0x2e, 0x4b, 0xfe, 0x57,
    0x15, 0x77, 0x37, 0xe5, 0x9f, 0xf0, 0x4a, 0xda, 0x58, 0xc9, 0x29, 0x0a, 0xb1, 0xa0, 0x6b, 0x85,
    0xbd, 0x5d, 0x10, 0xf4, 0xcb, 0x3e, 0x05, 0x67, 0xe4, 0x27, 0x41, 0x8b, 0xa7, 0x7d, 0x95, 0xd8,
    0xfb, 0xee, 0x7c, 0x66, 0xdd, 0x17, 0x47, 0x9e, 0xca, 0x2d, 0xbf, 0x07, 0xad, 0x5a, 0x83, 0x33,
    0x63, 0x02, 0xaa, 0x71, 0xc8, 0x19, 0x49, 0xd9, 0xf2, 0xe3, 0x5b, 0x88, 0x9a, 0x26, 0x32, 0xb0,
    0xe9, 0x0f, 0xd5, 0x80, 0xbe, 0xcd, 0x34, 0x48, 0xff, 0x7a, 0x90, 0x5f, 0x20, 0x68, 0x1a, 0xae,
    0xb4, 0x54, 0x93, 0x22, 0x64, 0xf1, 0x73, 0x12, 0x40, 0x08, 0xc3, 0xec, 0xdb, 0xa1, 0x8d, 0x3d,
    0x97, 0x00, 0xcf, 0x2b, 0x76, 0x82, 0xd6, 0x1b, 0xb5, 0xaf, 0x6a, 0x50, 0x45, 0xf3, 0x30, 0xef,
    0x3f, 0x55, 0xa2, 0xea, 0x65, 0xba, 0x2f, 0xc0, 0xde, 0x1c, 0xfd, 0x4d, 0x92, 0x75, 0x06, 0x8a,
    0xb2, 0xe6, 0x0e, 0x1f, 0x62, 0xd4, 0xa8, 0x96, 0xf9, 0xc5, 0x25, 0x59, 0x84, 0x72, 0x39, 0x4c,
    0x5e, 0x78, 0x38, 0x8c, 0xd1, 0xa5, 0xe2, 0x61, 0xb3, 0x21, 0x9c, 0x1e, 0x43, 0xc7, 0xfc, 0x04,
    0x51, 0x99, 0x6d, 0x0d, 0xfa, 0xdf, 0x7e, 0x24, 0x3b, 0xab, 0xce, 0x11, 0x8f, 0x4e, 0xb7, 0xeb,
    0x3c, 0x81, 0x94, 0xf7, 0xb9, 0x13, 0x2c, 0xd3, 0xe7, 0x6e, 0xc4, 0x03, 0x56, 0x44, 0x7f, 0xa9,
    0x2a, 0xbb, 0xc1, 0x53, 0xdc, 0x0b, 0x9d, 0x6c, 0x31, 0x74, 0xf6, 0x46, 0xac, 0x89, 0x14, 0xe1,
    0x16, 0x3a, 0x69, 0x09, 0x70, 0xb6, 0xd0, 0xed, 0xcc, 0x42, 0x98, 0xa4, 0x28, 0x5c, 0xf8, 0x86,
];

pub(crate) const SKIPJACK: [u16; 256] = [
    0xa3, 0xd7, 0x09, 0x83, 0xf8, 0x48, 0xf6, 0xf4, 0xb3, 0x21, 0x15, 0x78, 0x99, 0xb1, 0xaf, 0xf9,
    0xe7, 0x2d, 0x4d, 0x8a, 0xce, 0x4c, 0xca, 0x2e, 0x52, 0x95, 0xd9, 0x1e, 0x4e, 0x38, 0x44, 0x28,
    0x0a, 0xdf, 0x02, 0xa0, 0x17, 0xf1, 0x60, 0x68, 0x12, 0xb7, 0x7a, 0xc3, 0xe9, 0xfa, 0x3d, 0x53,
    0x96, 0x84, 0x6b, 0xba, 0xf2, 0x63, 0x9a, 0x19, 0x7c, 0xae, 0xe5, 0xf5, 0xf7, 0x16, 0x6a, 0xa2,
    0x39, 0xb6, 0x7b, 0x0f, 0xc1, 0x93, 0x81, 0x1b, 0xee, 0xb4, 0x1a, 0xea, 0xd0, 0x91, 0x2f, 0xb8,
    0x55, 0xb9, 0xda, 0x85, 0x3f, 0x41, 0xbf, 0xe0, 0x5a, 0x58, 0x80, 0x5f, 0x66, 0x0b, 0xd8, 0x90,
    0x35, 0xd5, 0xc0, 0xa7, 0x33, 0x06, 0x65, 0x69, 0x45, 0x00, 0x94, 0x56, 0x6d, 0x98, 0x9b, 0x76,
    0x97, 0xfc, 0xb2, 0xc2, 0xb0, 0xfe, 0xdb, 0x20, 0xe1, 0xeb, 0xd6, 0xe4, 0xdd, 0x47, 0x4a, 0x1d,
    0x42, 0xed, 0x9e, 0x6e, 0x49, 0x3c, 0xcd, 0x43, 0x27, 0xd2, 0x07, 0xd4, 0xde, 0xc7, 0x67, 0x18,
    0x89, 0xcb, 0x30, 0x1f, 0x8d, 0xc6, 0x8f, 0xaa, 0xc8, 0x74, 0xdc, 0xc9, 0x5d, 0x5c, 0x31, 0xa4,
    0x70, 0x88, 0x61, 0x2c, 0x9f, 0x0d, 0x2b, 0x87, 0x50, 0x82, 0x54, 0x64, 0x26, 0x7d, 0x03, 0x40,
    0x34, 0x4b, 0x1c, 0x73, 0xd1, 0xc4, 0xfd, 0x3b, 0xcc, 0xfb, 0x7f, 0xab, 0xe6, 0x3e, 0x5b, 0xa5,
    0xad, 0x04, 0x23, 0x9c, 0x14, 0x51, 0x22, 0xf0, 0x29, 0x79, 0x71, 0x7e, 0xff, 0x8c, 0x0e, 0xe2,
    0x0c, 0xef, 0xbc, 0x72, 0x75, 0x6f, 0x37, 0xa1, 0xec, 0xd3, 0x8e, 0x62, 0x8b, 0x86, 0x10, 0xe8,
    0x08, 0x77, 0x11, 0xbe, 0x92, 0x4f, 0x24, 0xc5, 0x32, 0x36, 0x9d, 0xcf, 0xf3, 0xa6, 0xbb, 0xac,
    0x5e, 0x6c, 0xa9, 0x13, 0x57, 0x25, 0xb5, 0xe3, 0xbd, 0xa8, 0x3a, 0x01, 0x05, 0x59, 0x2a, 0x46,
];

pub(crate) const SC: [u16; 256] = [
    0xab, 0xf0, 0x5e, 0x3f, 0xfa, 0xe2, 0x6f, 0x8e, 0x3c, 0x36, 0x30, 0xdb, 0x29, 0x73, 0xda, 0x45,
    0x87, 0xf9, 0x60, 0x3b, 0xbf, 0xa4, 0xc7, 0x0c, 0xa9, 0xc0, 0xf3, 0xcb, 0x68, 0xff, 0xee, 0xa6,
    0x90, 0x57, 0xf2, 0x77, 0xef, 0xc2, 0x78, 0xb7, 0x94, 0x32, 0xe6, 0x4d, 0x53, 0x6d, 0x26, 0x98,
    0xc1, 0x2c, 0x2a, 0x9a, 0x12, 0x2b, 0xea, 0xe8, 0x17, 0x7c, 0x5c, 0x6e, 0x50, 0xd9, 0xf6, 0x88,
    0x83, 0x69, 0x5a, 0x67, 0xaf, 0xb9, 0x1a, 0xb8, 0x8a, 0xd4, 0xb4, 0xa0, 0xcc, 0xe1, 0x24, 0xc6,
    0xbe, 0x1f, 0xa1, 0x51, 0x9f, 0x64, 0x4e, 0x4f, 0x2f, 0x85, 0x6b, 0x76, 0x86, 0x35, 0x4b, 0xed,
    0x81, 0x84, 0x39, 0x13, 0x62, 0xc3, 0x9e, 0xdc, 0xd0, 0x66, 0x5f, 0x44, 0xde, 0x1c, 0xbd, 0x34,
    0x1d, 0x1e, 0x2d, 0x6c, 0xa2, 0x46, 0x97, 0xc5, 0x37, 0x61, 0xa3, 0x56, 0xfe, 0xf7, 0xd5, 0x38,
    0xce, 0x05, 0x09, 0x18, 0xaa, 0xfc, 0x91, 0x28, 0x9b, 0x10, 0xe9, 0x0b, 0x71, 0xdd, 0xe7, 0x23,
    0x7f, 0x72, 0x59, 0x6a, 0x43, 0xfd, 0xd1, 0xe4, 0xf8, 0x0d, 0x55, 0x74, 0xc8, 0xf5, 0x27, 0x65,
    0x93, 0xc4, 0x19, 0x49, 0x00, 0x20, 0x3d, 0x2e, 0xa8, 0xd3, 0x01, 0x7d, 0x25, 0x0e, 0xf4, 0x33,
    0x02, 0x04, 0x0a, 0x14, 0x16, 0xae, 0x31, 0x11, 0xcf, 0x79, 0x8f, 0xd8, 0x8b, 0xd7, 0xca, 0xb3,
    0xbb, 0x3e, 0x0f, 0x92, 0xdf, 0x40, 0x4c, 0xcd, 0xac, 0x22, 0x5b, 0xa5, 0xbc, 0xf1, 0x75, 0x89,
    0x96, 0xb1, 0xe3, 0xd2, 0x7a, 0x1b, 0x70, 0x58, 0x03, 0x47, 0x80, 0x9c, 0x06, 0xba, 0xc9, 0x54,
    0xad, 0x41, 0x99, 0x48, 0x7e, 0x3a, 0x95, 0xe0, 0xec, 0x07, 0x63, 0x7b, 0xb2, 0x21, 0xb0, 0x4a,
    0x8d, 0xd6, 0x15, 0xfb, 0x9d, 0x5d, 0x8c, 0x42, 0x08, 0xb6, 0xeb, 0xa7, 0xb5, 0xe5, 0x52, 0x82,
];

pub(crate) const SC_BEST: [u16; 256] = [
    0xa9, 0x7b, 0xbb, 0xc9, 0x0a, 0x55, 0xd1, 0xc1, 0xa3, 0x1a, 0x24, 0x26, 0xbf, 0x72, 0xf6, 0x0d,
    0x4a, 0x73, 0xe2, 0xf1, 0x3a, 0xd3, 0x35, 0xb2, 0x64, 0x93, 0xf5, 0xd7, 0xff, 0xdc, 0xcb, 0x4e,
    0xde, 0x7a, 0xa2, 0x98, 0xd9, 0x87, 0xb3, 0xa5, 0x28, 0xba, 0xa0, 0x45, 0x56, 0x67, 0x61, 0x0c,
    0xa7, 0x33, 0x53, 0x2d, 0xe7, 0x58, 0x7e, 0xb6, 0x37, 0x71, 0x1e, 0x10, 0xd0, 0xe0, 0xb7, 0x49,
    0x96, 0x91, 0x6e, 0xb0, 0xf9, 0x5b, 0xfb, 0x13, 0x8a, 0xdb, 0xad, 0xa1, 0x8c, 0x39, 0x22, 0xee,
    0x89, 0x4f, 0x50, 0xda, 0x07, 0x75, 0x65, 0xbd, 0x9f, 0x18, 0xcd, 0x17, 0x41, 0xbe, 0x2f, 0x40,
    0xca, 0x05, 0xae, 0x32, 0x94, 0xf7, 0xa8, 0xb1, 0xaa, 0xf8, 0xe9, 0xe4, 0x82, 0x54, 0x01, 0x69,
    0x27, 0x81, 0x5c, 0x84, 0x7f, 0xb4, 0x29, 0xd2, 0xfc, 0x0e, 0xa4, 0x36, 0x90, 0x2e, 0x15, 0x00,
    0x4c, 0x51, 0x25, 0x11, 0x16, 0xf3, 0x3d, 0x8d, 0x9c, 0x6c, 0x95, 0xef, 0x76, 0xcc, 0x8b, 0xdd,
    0x2b, 0xf4, 0xce, 0x43, 0x62, 0xd4, 0x74, 0xfe, 0x92, 0xc2, 0x7c, 0x80, 0x2a, 0x21, 0x68, 0xbc,
    0xc0, 0x23, 0xaf, 0xe3, 0x78, 0x6f, 0xe1, 0xeb, 0x03, 0x38, 0x09, 0x42, 0xd6, 0xed, 0xec, 0x02,
    0x1d, 0xfa, 0x5e, 0xb9, 0xc8, 0xc7, 0x46, 0x14, 0xe6, 0x99, 0x9d, 0x04, 0xc4, 0xd8, 0x3f, 0x9b,
    0xe5, 0x4d, 0x31, 0x63, 0x79, 0x3c, 0xd5, 0xf0, 0x47, 0x57, 0x4b, 0xc6, 0xf2, 0x2c, 0x70, 0xb5,
    0xcf, 0x9e, 0x0b, 0x3e, 0x1f, 0x5a, 0xa6, 0x6a, 0x6b, 0x12, 0x1b, 0x77, 0x5f, 0x48, 0xac, 0x3b,
    0x44, 0x34, 0x5d, 0xea, 0x20, 0x85, 0x8f, 0x30, 0x9a, 0xab, 0x1c, 0xc3, 0x59, 0x8e, 0xfd, 0x08,
    0xb8, 0xe8, 0x06, 0x6d, 0x66, 0x7d, 0xdf, 0x60, 0x52, 0x83, 0x88, 0x19, 0x0f, 0x97, 0xc5, 0x86,
];

pub(crate) const AES_OPT: [u16; 256] = [
    0x63, 0x7c, 0x77, 0x7b, 0xf2, 0x6b, 0x6f, 0xc5, 0x30, 0x01, 0x67, 0x2b, 0xfe, 0xd7, 0xab, 0x76,
    0xc2, 0x92, 0xc9, 0x7d, 0xfb, 0x59, 0x47, 0xf0, 0xad, 0xc4, 0xc0, 0xae, 0xc8, 0xa4, 0x3a, 0xa8,
    0xb7, 0xfd, 0x93, 0x26, 0x36, 0x3f, 0xfa, 0xcc, 0x34, 0xa5, 0xe5, 0xf1, 0x71, 0xd8, 0xb5, 0x11,
    0x04, 0xc7, 0x33, 0xc3, 0x18, 0x96, 0x05, 0x9c, 0x07, 0x12, 0x88, 0xe1, 0xeb, 0x2f, 0xb2, 0x35,
    0x09, 0x82, 0x2c, 0x1b, 0x19, 0x6e, 0x1a, 0xa0, 0x42, 0x3b, 0xd6, 0xbb, 0x29, 0xe2, 0x27, 0x85,
    0x53, 0xd1, 0x20, 0xed, 0x10, 0xfc, 0x31, 0x4b, 0x6a, 0xcb, 0xbe, 0x39, 0x8e, 0x4c, 0x58, 0xef,
    0xd0, 0x8f, 0xa2, 0xf7, 0x43, 0x0d, 0x23, 0x84, 0x46, 0xe9, 0x03, 0x7e, 0x50, 0x38, 0x9f, 0x2a,
    0x51, 0xa3, 0x40, 0xcf, 0x83, 0x9d, 0x28, 0xf3, 0xbd, 0xb6, 0xde, 0x21, 0x00, 0xff, 0xf5, 0xd2,
    0xcd, 0xd4, 0x13, 0xee, 0x5d, 0x97, 0x44, 0x17, 0x0c, 0xa7, 0x7f, 0x3d, 0x64, 0x5f, 0x5b, 0x73,
    0x41, 0xa1, 0x4f, 0xdd, 0x22, 0xaa, 0x90, 0x80, 0x45, 0xec, 0xf8, 0x14, 0xdb, 0x5e, 0x0b, 0x9b,
    0xe0, 0x7a, 0x6d, 0x0a, 0x49, 0x06, 0x24, 0x5c, 0xca, 0xd3, 0xac, 0x66, 0x91, 0x95, 0xe4, 0x32,
    0xe7, 0x9a, 0x37, 0x79, 0x8d, 0xd5, 0x4e, 0xa9, 0x6c, 0x56, 0xf4, 0xea, 0x65, 0x72, 0xaf, 0x08,
    0xba, 0x78, 0x25, 0x2e, 0x1c, 0xa6, 0xb4, 0xc6, 0xe8, 0xdc, 0x74, 0x1f, 0x5a, 0xbc, 0x8b, 0x8a,
    0x70, 0x3e, 0xb1, 0xe6, 0x48, 0x02, 0xf6, 0x0e, 0x61, 0x75, 0x57, 0xb9, 0x86, 0xc1, 0x1d, 0x9e,
    0xe3, 0xb8, 0x98, 0x15, 0x69, 0xd9, 0x4a, 0x94, 0xda, 0x1e, 0x87, 0xf9, 0xce, 0x55, 0x3c, 0xdf,
    0x8c, 0x81, 0x89, 0x4d, 0xbf, 0x62, 0x52, 0x68, 0x60, 0x99, 0x2d, 0x0f, 0xb0, 0x54, 0xb3, 0x16,
];

pub(crate) const WHIRLPOOL_OPT: [u16; 256] = [
    0x18, 0x23, 0xc6, 0xe8, 0x87, 0xb8, 0x01, 0x4f, 0x36, 0xa6, 0xd2, 0xf5, 0x79, 0x6f, 0x91, 0x52,
    0xf8, 0x46, 0xae, 0x1f, 0xdf, 0x5d, 0x0d, 0x83, 0xca, 0x28, 0xe0, 0xec, 0x22, 0x6d, 0xfe, 0x2a,
    0x53, 0x67, 0x37, 0xf4, 0x3f, 0xd0, 0x2d, 0xce, 0x38, 0x59, 0x2b, 0x0c, 0xc9, 0xe3, 0x6b, 0xb1,
    0x9d, 0x5b, 0x10, 0x26, 0xcb, 0xbc, 0xda, 0x73, 0xe6, 0x33, 0x41, 0x09, 0x34, 0x7d, 0xfc, 0x98,
    0x92, 0xdd, 0x74, 0x35, 0xbb, 0xab, 0x5f, 0x9e, 0xc8, 0x5c, 0xa7, 0x8d, 0xaf, 0x4c, 0x81, 0x3b,
    0x19, 0x32, 0x0b, 0x71, 0x8f, 0x89, 0x13, 0x63, 0xc2, 0x51, 0x4a, 0x21, 0x9a, 0x0a, 0x06, 0x04,
    0x93, 0x0f, 0xd5, 0x82, 0xba, 0xcd, 0x1e, 0x84, 0xff, 0x7a, 0x85, 0x47, 0xe1, 0xc1, 0x1a, 0xe4,
    0x6c, 0x54, 0xc3, 0xf3, 0x60, 0xad, 0x8c, 0x5e, 0x1c, 0x44, 0x02, 0xdc, 0x1b, 0xa1, 0xa3, 0x3d,
    0xb5, 0x00, 0xed, 0x2f, 0x78, 0xd9, 0x9f, 0x49, 0x17, 0x69, 0x6a, 0xf7, 0x31, 0x77, 0x30, 0xef,
    0x2e, 0xd1, 0xa2, 0xea, 0xfb, 0x9b, 0x97, 0x40, 0xd8, 0x9c, 0x55, 0x4d, 0xf2, 0x75, 0x27, 0x8a,
    0xeb, 0x86, 0x5a, 0xfa, 0x42, 0xee, 0xa8, 0xb7, 0xf1, 0x57, 0x29, 0x80, 0x90, 0x12, 0x39, 0x65,
    0xcf, 0x3c, 0x76, 0xf0, 0x7b, 0x61, 0x62, 0x03, 0x11, 0x45, 0x20, 0x16, 0x43, 0xc7, 0xbf, 0xd6,
    0x05, 0x4e, 0x4b, 0x1d, 0xdb, 0xb3, 0x7e, 0xf6, 0x72, 0x66, 0xde, 0xa5, 0xe7, 0xf9, 0x7f, 0xb2,
    0x25, 0xb0, 0xbe, 0x50, 0x68, 0x70, 0xbd, 0x07, 0xd3, 0x6e, 0xc4, 0xe5, 0x3e, 0xb9, 0x8e, 0xa9,
    0x8b, 0x94, 0x08, 0x15, 0xcc, 0xaa, 0xfd, 0xb4, 0xc5, 0x58, 0xa0, 0x56, 0x2c, 0x0e, 0x14, 0xc0,
    0x24, 0x3a, 0xac, 0x99, 0xe9, 0xb6, 0xd4, 0x95, 0x48, 0xa4, 0x88, 0xe2, 0xd7, 0x7c, 0x64, 0x96,
];

pub(crate) const FANTOMAS_OPT: [u16; 256] = [
    0x1e, 0x75, 0x5f, 0xe1, 0x99, 0xfc, 0x89, 0x2f, 0x86, 0xee, 0xf1, 0x7b, 0x23, 0x52, 0x10, 0x94,
    0x4f, 0x59, 0x2c, 0x8b, 0xf8, 0x42, 0x30, 0x00, 0x6e, 0x84, 0x35, 0x70, 0xa0, 0xc3, 0x34, 0x6f,
    0x4e, 0x41, 0x01, 0x78, 0x8f, 0xa8, 0x07, 0x6c, 0x62, 0xaf, 0x7f, 0x22, 0x60, 0x79, 0x90, 0xec,
    0x68, 0xf4, 0xc4, 0x32, 0x1d, 0x8c, 0x0e, 0xce, 0xde, 0x3f, 0x44, 0x1f, 0x40, 0x98, 0x43, 0xd6,
    0xe7, 0xcc, 0xe0, 0xe6, 0xd1, 0x9a, 0x1a, 0xb3, 0x28, 0x1c, 0x7c, 0x0c, 0xb9, 0xc0, 0x71, 0x21,
    0xcb, 0x11, 0x9e, 0xe3, 0x48, 0xcd, 0xe9, 0x57, 0xf5, 0x63, 0x36, 0x1b, 0xb8, 0xbf, 0x9d, 0xa7,
    0x61, 0xd7, 0xf3, 0xa9, 0x12, 0xfd, 0xc1, 0xb7, 0x8e, 0xa6, 0x6b, 0x66, 0x72, 0x64, 0x85, 0xd5,
    0x4b, 0x7e, 0x67, 0x3c, 0x65, 0x17, 0xba, 0x4a, 0x97, 0x29, 0x83, 0x6a, 0xae, 0xf0, 0xe4, 0x2e,
    0x77, 0x74, 0xe8, 0x2a, 0xac, 0x95, 0x3a, 0xa2, 0x3d, 0xfa, 0x50, 0x58, 0xea, 0x9f, 0x93, 0x33,
    0xb5, 0x5c, 0x06, 0x51, 0xa3, 0x76, 0x7a, 0x80, 0xbd, 0x16, 0x39, 0x0a, 0x03, 0x73, 0xd0, 0x05,
    0xf9, 0xb0, 0x55, 0x2d, 0xb2, 0x49, 0xf7, 0x19, 0xc6, 0x45, 0xd2, 0xd8, 0x5d, 0xf2, 0x87, 0xed,
    0xda, 0xeb, 0x91, 0xca, 0x3b, 0x47, 0xcf, 0xfb, 0xc7, 0xdc, 0xf6, 0xa4, 0xdf, 0xfe, 0xb1, 0x09,
    0x0f, 0x0d, 0x2b, 0x26, 0x14, 0xff, 0x4d, 0xbc, 0x02, 0x81, 0xb4, 0xbe, 0x15, 0xc5, 0xd4, 0x27,
    0x88, 0x04, 0x82, 0xc8, 0x46, 0xe5, 0x24, 0xc2, 0x9b, 0x7d, 0x8d, 0xd9, 0x38, 0x6d, 0xef, 0xa1,
    0xdd, 0x69, 0x5a, 0x54, 0x9c, 0x53, 0x25, 0x20, 0x5b, 0xdb, 0x37, 0x5e, 0xab, 0x56, 0x0b, 0x4c,
    0x13, 0x3e, 0x8a, 0xd3, 0xad, 0x31, 0x08, 0x96, 0xa5, 0x18, 0xb6, 0xe2, 0xaa, 0x92, 0xc9, 0xbb,
];

pub(crate) const SKIPJACK_OPT: [u16; 256] = [
    0xa3, 0xd7, 0x09, 0x83, 0xf8, 0x48, 0xf6, 0xf4, 0xb3, 0x21, 0x15, 0x78, 0x99, 0xb1, 0xaf, 0xf9,
    0x5a, 0x6b, 0x69, 0x0a, 0x0f, 0x27, 0xca, 0x2f, 0x52, 0x95, 0xc3, 0x0d, 0x4e, 0xa0, 0xc5, 0x2c,
    0x8a, 0x12, 0x38, 0x6e, 0xbb, 0xd9, 0xc8, 0xe2, 0xcd, 0x02, 0x7e, 0x5f, 0xf1, 0x87, 0x19, 0x8f,
    0x96, 0xfe, 0x2d, 0xde, 0xb2, 0x6f, 0xb6, 0xac, 0x0c, 0xae, 0xe5, 0x7c, 0xf7, 0x43, 0xaa, 0x2a,
    0xb9, 0xf3, 0x7b, 0x1e, 0xeb, 0x9a, 0xcf, 0x73, 0xee, 0x61, 0x1a, 0xa9, 0x50, 0x9b, 0xff, 0xb8,
    0x76, 0x39, 0x92, 0x7f, 0x3a, 0x8c, 0xbf, 0x14, 0x60, 0x58, 0x80, 0xe1, 0x66, 0x0b, 0x86, 0x90,
    0x1f, 0x91, 0x62, 0xed, 0x33, 0xa6, 0x65, 0xe0, 0x67, 0xd4, 0x82, 0xd6, 0x6d, 0x98, 0xe6, 0x74,
    0xe8, 0x44, 0x93, 0xc2, 0xb0, 0xfc, 0x9d, 0x6a, 0x81, 0xfa, 0x56, 0x42, 0x4d, 0x05, 0x4a, 0x5c,
    0xd8, 0x5d, 0xdf, 0xa4, 0x49, 0x1d, 0x9e, 0x16, 0x4c, 0xd2, 0xbe, 0x00, 0xba, 0xc6, 0x47, 0x53,
    0x84, 0xc0, 0x55, 0x3f, 0x1c, 0xc7, 0xd5, 0xa2, 0x88, 0x34, 0xdc, 0xc9, 0x7d, 0x3c, 0x31, 0x20,
    0xd3, 0x2e, 0xe9, 0x28, 0x9c, 0x8e, 0x23, 0xce, 0xdd, 0x94, 0x85, 0xa5, 0x22, 0x79, 0xa8, 0x40,
    0x30, 0x4b, 0xe4, 0x1b, 0xd1, 0x89, 0xa7, 0x3b, 0x11, 0xc1, 0xfd, 0x36, 0xe7, 0xcc, 0x5b, 0x64,
    0x9f, 0x04, 0xa1, 0x51, 0x97, 0x13, 0x26, 0xf0, 0x29, 0xdb, 0xcb, 0x7a, 0x75, 0x8b, 0x77, 0xd0,
    0x3d, 0xef, 0xbc, 0x70, 0x71, 0x63, 0x37, 0x2b, 0xec, 0x41, 0xda, 0x24, 0xad, 0x8d, 0x10, 0x18,
    0x01, 0xb5, 0x54, 0x07, 0x35, 0x4f, 0xb7, 0xc4, 0x32, 0x17, 0xb4, 0xfb, 0x72, 0x06, 0xab, 0x0e,
    0x5e, 0x6c, 0x68, 0xf2, 0x57, 0x25, 0xf5, 0xe3, 0xbd, 0x08, 0x3e, 0x03, 0x45, 0x59, 0xea, 0x46,
];
