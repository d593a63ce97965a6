/** Typed client for the edge HTTP API; the studio's only path to data. */

import { MamlDocument } from './maml.js';

export interface ServerViolation {
  rule: string;
  field: string;
  message: string;
  object_index: number | null;
}

export class ValidationRejected extends Error {
  constructor(public violations: ServerViolation[]) {
    super(`server rejected page: ${violations.map((v) => v.rule).join(', ')}`);
  }
}

export interface FetchedPage {
  doc: MamlDocument;
  sizeBytes: number; // X-Page-Size: the weight badge value
  fidelity: string;
  metricsToken: string;
}

export interface RegisteredUser {
  user_id: string;
  token: string;
}

export class EdgeClient {
  constructor(
    public baseUrl: string,
    public token: string | null = null,
  ) {}

  private headers(json = true): Record<string, string> {
    const h: Record<string, string> = {};
    if (json) h['Content-Type'] = 'application/json';
    if (this.token) h['Authorization'] = `Bearer ${this.token}`;
    return h;
  }

  async register(profile: {
    language?: string;
    location?: { lat: number; lon: number };
    interest_tags?: string[];
    preferred_fidelity?: string;
  } = {}): Promise<RegisteredUser> {
    const res = await fetch(`${this.baseUrl}/v1/users`, {
      method: 'POST',
      headers: this.headers(),
      body: JSON.stringify(profile),
    });
    if (!res.ok) throw new Error(`register failed: ${res.status}`);
    const user = (await res.json()) as RegisteredUser;
    this.token = user.token;
    return user;
  }

  async publish(
    doc: MamlDocument,
    communityId?: string,
  ): Promise<{ page_id: string; version: number }> {
    const query = communityId ? `?community_id=${encodeURIComponent(communityId)}` : '';
    const res = await fetch(`${this.baseUrl}/v1/pages${query}`, {
      method: 'POST',
      headers: this.headers(),
      body: JSON.stringify(doc),
    });
    if (res.status === 422) {
      const body = (await res.json()) as { violations: ServerViolation[] };
      throw new ValidationRejected(body.violations);
    }
    if (!res.ok) throw new Error(`publish failed: ${res.status} ${await res.text()}`);
    return (await res.json()) as { page_id: string; version: number };
  }

  async fetchPage(pageId: string, fidelity?: string): Promise<FetchedPage> {
    const query = fidelity ? `?fidelity=${fidelity}` : '';
    const res = await fetch(`${this.baseUrl}/v1/pages/${pageId}${query}`, {
      headers: this.headers(false),
    });
    if (!res.ok) throw new Error(`fetch page failed: ${res.status}`);
    return {
      doc: (await res.json()) as MamlDocument,
      sizeBytes: Number(res.headers.get('X-Page-Size') ?? 0),
      fidelity: res.headers.get('X-Fidelity') ?? 'medium',
      metricsToken: res.headers.get('X-Metrics-Token') ?? '',
    };
  }

  async postMetrics(token: string, pltMs: number, networkType = 'unknown', deviceModel = 'browser'): Promise<void> {
    await fetch(`${this.baseUrl}/v1/metrics`, {
      method: 'POST',
      headers: this.headers(),
      body: JSON.stringify({
        token,
        plt_ms: Math.round(pltMs),
        network_type: networkType,
        device_model: deviceModel,
      }),
    });
  }

  async hittest(doc: MamlDocument, points: Array<[number, number]>): Promise<Array<number | null>> {
    const res = await fetch(`${this.baseUrl}/v1/hittest`, {
      method: 'POST',
      headers: this.headers(),
      body: JSON.stringify({ document: doc, points }),
    });
    if (!res.ok) throw new Error(`hittest failed: ${res.status}`);
    return ((await res.json()) as { indices: Array<number | null> }).indices;
  }

  async communities(): Promise<Array<{ community_id: string; name: string; visibility: string }>> {
    const res = await fetch(`${this.baseUrl}/v1/communities`, { headers: this.headers(false) });
    if (!res.ok) throw new Error(`communities failed: ${res.status}`);
    return ((await res.json()) as { communities: Array<{ community_id: string; name: string; visibility: string }> })
      .communities;
  }

  async createCommunity(name: string, visibility = 'public'): Promise<string> {
    const res = await fetch(`${this.baseUrl}/v1/communities`, {
      method: 'POST',
      headers: this.headers(),
      body: JSON.stringify({ name, visibility }),
    });
    if (!res.ok) throw new Error(`create community failed: ${res.status}`);
    return ((await res.json()) as { community_id: string }).community_id;
  }

  async feed(communityId: string, alpha?: number): Promise<Array<{ content_id: string; page_id: string | null }>> {
    const query = alpha !== undefined ? `?alpha=${alpha}` : '';
    const res = await fetch(`${this.baseUrl}/v1/communities/${communityId}/feed${query}`, {
      headers: this.headers(false),
    });
    if (!res.ok) throw new Error(`feed failed: ${res.status}`);
    return ((await res.json()) as { items: Array<{ content_id: string; page_id: string | null }> }).items;
  }

  async submitAd(campaign: {
    ad_id?: string;
    creatives: { video_url?: string; image_url?: string; text_body?: string };
    click_href: string;
    home_community_id: string;
    visibility?: string;
    interest_tags?: string[];
    target_impressions?: number;
  }): Promise<string> {
    const res = await fetch(`${this.baseUrl}/v1/ads`, {
      method: 'POST',
      headers: this.headers(),
      body: JSON.stringify(campaign),
    });
    if (!res.ok) throw new Error(`ad submit failed: ${res.status} ${await res.text()}`);
    return ((await res.json()) as { ad_id: string }).ad_id;
  }

  async quote(adId: string): Promise<{ base_component: string; infra_component: string; weekly_charge: string }> {
    const res = await fetch(`${this.baseUrl}/v1/ads/${adId}/quote`, { method: 'POST', headers: this.headers() });
    if (!res.ok) throw new Error(`quote failed: ${res.status}`);
    return (await res.json()) as { base_component: string; infra_component: string; weekly_charge: string };
  }

  async uploadImage(data: Blob | ArrayBuffer, originalUrl?: string): Promise<{ media_id: string; urls: Record<string, string> }> {
    const query = originalUrl ? `&url=${encodeURIComponent(originalUrl)}` : '';
    const res = await fetch(`${this.baseUrl}/v1/media?kind=image${query}`, {
      method: 'POST',
      headers: this.headers(false),
      body: data,
    });
    if (!res.ok) throw new Error(`media upload failed: ${res.status}`);
    return (await res.json()) as { media_id: string; urls: Record<string, string> };
  }
}
