// Minimal PNG writer: RGBA bitmap -> PNG bytes using stored (uncompressed)
// deflate blocks. No dependencies, synchronous, works in browser and node,
// which keeps the export path fully testable.

const SIGNATURE = [0x89, 0x50, 0x4e, 0x47, 0x0d, 0x0a, 0x1a, 0x0a];

const CRC_TABLE = (() => {
  const table = new Uint32Array(256);
  for (let n = 0; n < 256; n++) {
    let c = n;
    for (let k = 0; k < 8; k++) {
      c = c & 1 ? 0xedb88320 ^ (c >>> 1) : c >>> 1;
    }
    table[n] = c >>> 0;
  }
  return table;
})();

export function crc32(bytes: Uint8Array): number {
  let c = 0xffffffff;
  for (let i = 0; i < bytes.length; i++) {
    c = CRC_TABLE[(c ^ bytes[i]) & 0xff] ^ (c >>> 8);
  }
  return (c ^ 0xffffffff) >>> 0;
}

function adler32(bytes: Uint8Array): number {
  let a = 1;
  let b = 0;
  for (let i = 0; i < bytes.length; i++) {
    a = (a + bytes[i]) % 65521;
    b = (b + a) % 65521;
  }
  return ((b << 16) | a) >>> 0;
}

function u32be(value: number): number[] {
  return [(value >>> 24) & 0xff, (value >>> 16) & 0xff, (value >>> 8) & 0xff, value & 0xff];
}

function chunk(type: string, data: Uint8Array): number[] {
  const typed = new Uint8Array(4 + data.length);
  for (let i = 0; i < 4; i++) typed[i] = type.charCodeAt(i);
  typed.set(data, 4);
  return [...u32be(data.length), ...typed, ...u32be(crc32(typed))];
}

/** zlib stream around stored deflate blocks (max 65535 bytes each). */
function zlibStored(raw: Uint8Array): Uint8Array {
  const blocks: number[] = [0x78, 0x01];
  const max = 65535;
  for (let offset = 0; offset < raw.length || offset === 0; offset += max) {
    const slice = raw.subarray(offset, Math.min(offset + max, raw.length));
    const final = offset + max >= raw.length ? 1 : 0;
    blocks.push(final, slice.length & 0xff, (slice.length >>> 8) & 0xff);
    blocks.push(~slice.length & 0xff, (~slice.length >>> 8) & 0xff);
    for (let i = 0; i < slice.length; i++) blocks.push(slice[i]);
    if (raw.length === 0) break;
  }
  blocks.push(...u32be(adler32(raw)));
  return new Uint8Array(blocks);
}

/** Encode an RGBA buffer (width * height * 4 bytes) as a PNG file. */
export function encodePng(
  rgba: Uint8Array,
  width: number,
  height: number,
): Uint8Array {
  if (rgba.length !== width * height * 4) {
    throw new Error(
      `buffer length ${rgba.length} does not match ${width}x${height} RGBA`,
    );
  }
  const stride = width * 4;
  const filtered = new Uint8Array((stride + 1) * height);
  for (let y = 0; y < height; y++) {
    filtered[y * (stride + 1)] = 0; // filter type: none
    filtered.set(rgba.subarray(y * stride, (y + 1) * stride), y * (stride + 1) + 1);
  }
  const ihdr = new Uint8Array([
    ...u32be(width),
    ...u32be(height),
    8, // bit depth
    6, // color type: RGBA
    0, // compression
    0, // filter
    0, // interlace
  ]);
  const out = [
    ...SIGNATURE,
    ...chunk("IHDR", ihdr),
    ...chunk("IDAT", zlibStored(filtered)),
    ...chunk("IEND", new Uint8Array(0)),
  ];
  return new Uint8Array(out);
}

/** Parse width/height back out of a PNG header (test helper / sanity check). */
export function pngDimensions(png: Uint8Array): { width: number; height: number } {
  for (let i = 0; i < SIGNATURE.length; i++) {
    if (png[i] !== SIGNATURE[i]) throw new Error("not a PNG: bad signature");
  }
  const be = (o: number) =>
    ((png[o] << 24) | (png[o + 1] << 16) | (png[o + 2] << 8) | png[o + 3]) >>> 0;
  return { width: be(16), height: be(20) };
}
