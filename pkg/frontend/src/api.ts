// Typed client for the game-session service. The UI computes no game
// logic; every state shown comes verbatim from these responses.

export interface GameState {
  id: string;
  kind: string;
  status: 'InProgress' | 'FirstWon' | 'SecondWon' | 'Draw';
  board: string;
  legal_moves: number[];
  to_move: 'first' | 'second';
  move_count: number;
}

export interface ConnectConfig {
  width: number;
  height: number;
  run_length: number;
  lookahead?: number;
}

export interface AiMoveResult {
  kind: 'moved';
  move: number;
  state: GameState;
}

export interface AiComputing {
  kind: 'computing';
}

export class ServiceError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

async function errorMessage(response: Response): Promise<string> {
  try {
    const body = await response.json();
    if (body && typeof body.error === 'string') return body.error;
  } catch {
    // fall through to the generic message
  }
  return `service error ${response.status}`;
}

export class GameClient {
  constructor(private baseUrl: string) {}

  private url(path: string): string {
    return `${this.baseUrl.replace(/\/$/, '')}${path}`;
  }

  async createGame(config: ConnectConfig): Promise<GameState> {
    const response = await fetch(this.url('/games'), {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify({ kind: 'connect', config }),
    });
    if (response.status !== 201) {
      throw new ServiceError(response.status, await errorMessage(response));
    }
    const body = await response.json();
    return { ...body.state, id: body.id };
  }

  async getGame(id: string): Promise<GameState> {
    const response = await fetch(this.url(`/games/${id}`));
    if (!response.ok) {
      throw new ServiceError(response.status, await errorMessage(response));
    }
    return response.json();
  }

  async submitMove(id: string, column: number): Promise<GameState> {
    const response = await fetch(this.url(`/games/${id}/moves`), {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify({ move: column }),
    });
    if (!response.ok) {
      throw new ServiceError(response.status, await errorMessage(response));
    }
    return response.json();
  }

  async requestAiMove(id: string): Promise<AiMoveResult | AiComputing> {
    const response = await fetch(this.url(`/games/${id}/ai-move`), {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify({}),
    });
    if (response.status === 202) {
      return { kind: 'computing' };
    }
    if (!response.ok) {
      throw new ServiceError(response.status, await errorMessage(response));
    }
    const body = await response.json();
    return { kind: 'moved', move: body.move, state: body.state };
  }
}
