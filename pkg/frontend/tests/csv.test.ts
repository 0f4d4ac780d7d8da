import { describe, expect, it } from "vitest";

import { checkUploadName, CsvError, parseDataset, parseRecords } from "../src/csv.js";

const SIMPLE = ",x,y,z\na,0.1,0.2,0.3\nb,0.4,0.5,0.6\n";

describe("parseRecords", () => {
  it("splits rows and cells", () => {
    expect(parseRecords(SIMPLE)).toEqual([
      ["", "x", "y", "z"],
      ["a", "0.1", "0.2", "0.3"],
      ["b", "0.4", "0.5", "0.6"],
    ]);
  });

  it("handles quoted commas and escaped quotes", () => {
    const records = parseRecords('"name, with comma","say ""hi""",2\n');
    expect(records).toEqual([['name, with comma', 'say "hi"', "2"]]);
  });

  it("handles CRLF and missing trailing newline", () => {
    expect(parseRecords("a,b\r\nc,d")).toEqual([
      ["a", "b"],
      ["c", "d"],
    ]);
  });

  it("drops blank trailing lines", () => {
    expect(parseRecords("a,b\n\n\n")).toEqual([["a", "b"]]);
  });

  it("rejects empty input", () => {
    expect(() => parseRecords("")).toThrow(CsvError);
  });

  it("rejects an unterminated quote", () => {
    expect(() => parseRecords('a,"broken\n')).toThrow(/unterminated/);
  });
});

describe("parseDataset", () => {
  it("builds the API dataset shape", () => {
    expect(parseDataset(SIMPLE)).toEqual({
      object_names: ["a", "b"],
      attribute_names: ["x", "y", "z"],
      values: [
        [0.1, 0.2, 0.3],
        [0.4, 0.5, 0.6],
      ],
    });
  });

  it("trims names but keeps interior spaces", () => {
    const parsed = parseDataset(",  x , y,z\n High-dose oral ,0.1,0.2,0.3\n");
    expect(parsed.attribute_names[0]).toBe("x");
    expect(parsed.object_names[0]).toBe("High-dose oral");
  });

  it("accepts scientific notation", () => {
    const parsed = parseDataset(",x,y,z\na,1e-1,2E-1,0.3\n");
    expect(parsed.values[0]).toEqual([0.1, 0.2, 0.3]);
  });

  it("reports the ragged row number", () => {
    expect(() => parseDataset(",x,y,z\na,1,2,3\nb,1,2\n")).toThrow(
      /row 3 has 3 cells, expected 4/,
    );
  });

  it("reports non-numeric cell coordinates", () => {
    expect(() => parseDataset(",x,y,z\na,1,oops,3\n")).toThrow(/\(a, y\)/);
  });

  it("needs a data row", () => {
    expect(() => parseDataset(",x,y,z\n")).toThrow(CsvError);
  });

  it("needs three attributes", () => {
    expect(() => parseDataset(",x,y\na,1,2\n")).toThrow(/3 attribute/);
  });
});

describe("checkUploadName", () => {
  it("accepts csv, rejects spreadsheets", () => {
    expect(checkUploadName("scores.csv")).toBeNull();
    expect(checkUploadName("scores.XLSX")).toMatch(/csv/);
    expect(checkUploadName("legacy.xls")).toMatch(/csv/);
  });
});
