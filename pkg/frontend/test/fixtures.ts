import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type { ProfileDoc, Report, SearchPayload } from "../src/types.js";

const here = dirname(fileURLToPath(import.meta.url));

export function loadFixture<T>(name: string): T {
  return JSON.parse(readFileSync(join(here, "fixtures", name), "utf-8")) as T;
}

export const searchTwoSource = () => loadFixture<SearchPayload>("search_two_source.json");
export const searchCollision = () => loadFixture<SearchPayload>("search_collision.json");
export const walkthroughProfile = () => loadFixture<ProfileDoc>("walkthrough_profile.json");
export const reportWalkthrough = () => loadFixture<Report>("report_walkthrough.json");
export const reportAfterApply = () => loadFixture<Report>("report_after_apply.json");
