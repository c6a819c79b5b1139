import { describe, expect, it } from "vitest";

import { WorkingCopy } from "../src/workingCopy.js";
import { walkthroughProfile } from "./fixtures.js";

describe("WorkingCopy", () => {
  it("applying a recommendation mutates exactly one field", () => {
    const wc = new WorkingCopy(walkthroughProfile());
    const before = JSON.parse(JSON.stringify(wc.doc));
    wc.applyRecommendation("education", 0, "DegreeName", "Master's degree");
    expect(wc.doc.sections.education[0].degree_name).toBe("Master's degree");

    const after = JSON.parse(JSON.stringify(wc.doc));
    after.sections.education[0].degree_name = before.sections.education[0].degree_name;
    expect(after).toEqual(before);
  });

  it("sets the dirty flag on apply", () => {
    const wc = new WorkingCopy(walkthroughProfile());
    expect(wc.dirty).toBe(false);
    wc.applyRecommendation("experience", 0, "OrganizationName", "Siemens");
    expect(wc.dirty).toBe(true);
  });

  it("undo restores the prior value", () => {
    const wc = new WorkingCopy(walkthroughProfile());
    wc.applyRecommendation("education", 0, "DegreeName", "Master's degree");
    expect(wc.canUndo).toBe(true);
    const edit = wc.undo();
    expect(edit?.applied).toBe("Master's degree");
    expect(wc.doc.sections.education[0].degree_name).toBe("Master");
    expect(wc.dirty).toBe(false);
    expect(wc.canUndo).toBe(false);
  });

  it("undo removes an attribute that did not exist before", () => {
    const wc = new WorkingCopy(walkthroughProfile());
    wc.applyRecommendation("education", 0, "FieldOfStudy", "Computer Science");
    expect(wc.doc.sections.education[0].field_of_study).toBe("Computer Science");
    wc.undo();
    expect("field_of_study" in wc.doc.sections.education[0]).toBe(false);
  });

  it("stacked applies undo in reverse order", () => {
    const wc = new WorkingCopy(walkthroughProfile());
    wc.applyRecommendation("education", 0, "DegreeName", "Master's degree");
    wc.applyRecommendation("experience", 1, "JobTitle", "Teaching Assistant");
    wc.undo();
    expect(wc.doc.sections.experience[1].title).toBe("Teaching asistant");
    expect(wc.doc.sections.education[0].degree_name).toBe("Master's degree");
    expect(wc.dirty).toBe(true);
    wc.undo();
    expect(wc.doc.sections.education[0].degree_name).toBe("Master");
    expect(wc.dirty).toBe(false);
  });

  it("throws on a location the document does not have", () => {
    const wc = new WorkingCopy(walkthroughProfile());
    expect(() => wc.applyRecommendation("award", 0, "AwardTitle", "Prize")).toThrow();
  });

  it("exports the document as one JSON line", () => {
    const wc = new WorkingCopy(walkthroughProfile());
    wc.applyRecommendation("experience", 0, "OrganizationName", "Siemens");
    const parsed = JSON.parse(wc.exportText());
    expect(parsed.sections.experience[0].organization_name).toBe("Siemens");
    expect(parsed.id).toBe(wc.doc.id);
  });
});
