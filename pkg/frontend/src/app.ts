// Single-page connect-family client: a new-game form, a click-to-move
// board, and an AI reply cycle. One request in flight at a time; the
// rendered state always equals the last response body.

import { AiComputing, AiMoveResult, GameClient, GameState, ServiceError } from './api.js';

type Phase = 'form' | 'humanTurn' | 'pending' | 'finished';

interface AppState {
  phase: Phase;
  game: GameState | null;
  banner: string;
  bannerKind: 'info' | 'error';
  retryAi: boolean;
}

const STATUS_BANNERS: Record<GameState['status'], string> = {
  InProgress: '',
  FirstWon: 'First player wins',
  SecondWon: 'Second player wins',
  Draw: 'Draw',
};

export class App {
  private state: AppState = {
    phase: 'form',
    game: null,
    banner: '',
    bannerKind: 'info',
    retryAi: false,
  };

  constructor(private root: HTMLElement, private client: GameClient) {
    this.render();
  }

  private setState(update: Partial<AppState>): void {
    this.state = { ...this.state, ...update };
    this.render();
  }

  private applyGameState(game: GameState): void {
    const finished = game.status !== 'InProgress';
    this.setState({
      game,
      phase: finished ? 'finished' : game.to_move === 'first' ? 'humanTurn' : 'pending',
      banner: STATUS_BANNERS[game.status],
      bannerKind: 'info',
      retryAi: false,
    });
  }

  async newGame(width: number, height: number, runLength: number, lookahead: number): Promise<void> {
    this.setState({ phase: 'pending', banner: '', retryAi: false });
    try {
      const game = await this.client.createGame({
        width,
        height,
        run_length: runLength,
        lookahead,
      });
      this.applyGameState(game);
    } catch (err) {
      this.setState({
        phase: 'form',
        game: null,
        banner: err instanceof Error ? err.message : String(err),
        bannerKind: 'error',
      });
    }
  }

  async clickColumn(column: number): Promise<void> {
    const game = this.state.game;
    if (this.state.phase !== 'humanTurn' || !game) return;
    this.setState({ phase: 'pending', banner: '' });
    try {
      const afterHuman = await this.client.submitMove(game.id, column);
      this.applyGameState(afterHuman);
      if (afterHuman.status === 'InProgress' && afterHuman.to_move === 'second') {
        this.setState({ phase: 'pending' });
        await this.aiReply();
      }
    } catch (err) {
      if (err instanceof ServiceError && err.status === 409) {
        this.setState({ phase: 'humanTurn', banner: 'Illegal move', bannerKind: 'error' });
      } else {
        this.setState({
          phase: 'humanTurn',
          banner: err instanceof Error ? err.message : String(err),
          bannerKind: 'error',
        });
      }
    }
  }

  async aiReply(): Promise<void> {
    const game = this.state.game;
    if (!game) return;
    let result: AiMoveResult | AiComputing;
    try {
      result = await this.client.requestAiMove(game.id);
    } catch (err) {
      this.setState({
        phase: 'pending',
        banner: err instanceof Error ? err.message : String(err),
        bannerKind: 'error',
        retryAi: true,
      });
      return;
    }
    if (result.kind === 'computing') {
      this.setState({
        phase: 'pending',
        banner: 'Still thinking...',
        bannerKind: 'info',
        retryAi: true,
      });
      return;
    }
    this.applyGameState(result.state);
  }

  getState(): AppState {
    return this.state;
  }

  private render(): void {
    this.root.replaceChildren();
    if (this.state.banner) {
      const banner = document.createElement('div');
      banner.className = `banner banner-${this.state.bannerKind}`;
      banner.setAttribute('data-testid', 'banner');
      banner.textContent = this.state.banner;
      this.root.appendChild(banner);
    }
    if (this.state.phase === 'form' || !this.state.game) {
      this.root.appendChild(this.renderForm());
      return;
    }
    this.root.appendChild(this.renderBoard(this.state.game));
    const info = document.createElement('div');
    info.setAttribute('data-testid', 'turn');
    info.textContent =
      this.state.phase === 'pending'
        ? 'Waiting for the service...'
        : this.state.phase === 'finished'
          ? 'Game over'
          : 'Your turn (X)';
    this.root.appendChild(info);
    if (this.state.retryAi) {
      const retry = document.createElement('button');
      retry.setAttribute('data-testid', 'retry-ai');
      retry.textContent = 'Retry AI move';
      retry.addEventListener('click', () => void this.aiReply());
      this.root.appendChild(retry);
    }
    const again = document.createElement('button');
    again.setAttribute('data-testid', 'new-game');
    again.textContent = 'New game';
    again.addEventListener('click', () =>
      this.setState({ phase: 'form', game: null, banner: '', retryAi: false }),
    );
    this.root.appendChild(again);
  }

  private renderForm(): HTMLElement {
    const form = document.createElement('form');
    form.setAttribute('data-testid', 'new-game-form');
    const fields: Array<[string, number]> = [
      ['width', 7],
      ['height', 6],
      ['run_length', 4],
      ['lookahead', 6],
    ];
    for (const [name, fallback] of fields) {
      const label = document.createElement('label');
      label.textContent = name;
      const input = document.createElement('input');
      input.name = name;
      input.type = 'number';
      input.value = String(fallback);
      label.appendChild(input);
      form.appendChild(label);
    }
    const submit = document.createElement('button');
    submit.type = 'submit';
    submit.textContent = 'Start';
    form.appendChild(submit);
    form.addEventListener('submit', (event) => {
      event.preventDefault();
      const value = (name: string) =>
        Number((form.elements.namedItem(name) as HTMLInputElement).value);
      void this.newGame(value('width'), value('height'), value('run_length'), value('lookahead'));
    });
    return form;
  }

  private renderBoard(game: GameState): HTMLElement {
    const rows = game.board.split('\n');
    const table = document.createElement('table');
    table.setAttribute('data-testid', 'board');
    const clickable = this.state.phase === 'humanTurn';
    rows.forEach((row, r) => {
      const tr = document.createElement('tr');
      [...row].forEach((cell, c) => {
        const td = document.createElement('td');
        td.setAttribute('data-testid', `cell-${r}-${c}`);
        td.textContent = cell === '.' ? '' : cell;
        if (clickable) {
          td.addEventListener('click', () => void this.clickColumn(c + 1));
        }
        tr.appendChild(td);
      });
      table.appendChild(tr);
    });
    return table;
  }
}
