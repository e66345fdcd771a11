// JSON shapes of the game service (coordinates are exact rational strings)

export interface MoveCoord {
  x: string;
  y: string;
}

export interface FinishedStatus {
  loser: 1 | 2;
  witness: number[];
}

export type GameStatus = "ongoing" | FinishedStatus;

export interface GameStateJson {
  id: string;
  mode: string;
  variant: "convex" | "empty";
  moves: MoveCoord[];
  status: GameStatus;
  step: number;
  label: string | null;
}

export interface MoveOutcomeJson {
  accepted: boolean;
  status: GameStatus;
  step: number;
  label: string | null;
  engine_reply: MoveCoord | null;
}

export interface OverlayJson {
  losing_regions: MoveCoord[][];
  label: string | null;
  step: number;
  layers: MoveCoord[][];
}

export interface ApiError {
  code: string;
  message: string;
}
